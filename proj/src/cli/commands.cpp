#include "rns/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "rns/export.hpp"
#include "rns/identities.hpp"
#include "rns/sampling.hpp"
#include "rns/text.hpp"
#include "rns/variety.hpp"

namespace rns::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

EnumerationOptions enumeration_options(const RunConfig& config) {
  EnumerationOptions opts;
  opts.budget = config.budget;
  opts.threads = config.threads;
  opts.seed = config.seed.value_or(0);
  return opts;
}

void warn_large_weights(const EquationSet& eqs, std::ostream& err) {
  const ConstructionOptions defaults;
  for (const auto& g : eqs.weight_gens) {
    if (g.degree() > defaults.blowup_threshold) {
      err << "warning: " << g.label << " has degree " << g.degree() << " (threshold " << defaults.blowup_threshold
          << "); expansion may be very large\n";
    }
  }
}

std::string point_string(const ProjectivePoint& pt) {
  std::string out = "(";
  for (std::size_t k = 0; k < pt.size(); ++k) out += (k ? ":" : "") + std::to_string(pt[k]);
  return out + ")";
}

struct CheckRow {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<CheckRow> symbolic_checks(const ScrollProfile& profile) {
  std::vector<CheckRow> rows;
  std::set<std::pair<unsigned, unsigned>> seen;
  for (unsigned i = 1; i <= profile.d(); ++i) {
    for (unsigned j = i + 1; j <= profile.d(); ++j) {
      const auto key = std::make_pair(profile.size(i), profile.size(j));
      if (!seen.insert(key).second) continue;
      const std::string tag = "B(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
      const auto p1 = check_property1(key.first, key.second);
      rows.push_back({"property1 " + tag, p1.passed, p1.passed ? std::string() : "residual " + to_string(p1.residual)});
      const auto p2 = check_property2(key.first, key.second);
      rows.push_back({"property2 " + tag, p2.passed, p2.passed ? std::string() : "residual " + to_string(p2.residual)});
    }
  }
  const auto param = check_parametrization(profile);
  std::string failed;
  for (const auto& c : param.checks) {
    if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.label;
  }
  rows.push_back({"parametrization", param.passed(),
                  std::to_string(param.checks.size()) + " generators" + (failed.empty() ? "" : "; failing: " + failed)});
  const auto pl = plucker_identity(static_cast<unsigned>(profile.d()));
  rows.push_back({"plucker d=" + std::to_string(profile.d()), pl.passed(), std::to_string(pl.quadruples) + " quadruples"});
  return rows;
}

std::string variety_detail(const VarietyReport& r) {
  std::string out = "|V(J)|=" + std::to_string(r.count_J) + " |V(P)|=" + std::to_string(r.count_P) +
                    " witnesses=" + std::to_string(r.witnesses.size()) + " points=" + std::to_string(r.points_enumerated);
  for (std::size_t k = 0; k < r.witnesses.size() && k < 5; ++k) out += " " + point_string(r.witnesses[k]);
  return out;
}

}  // namespace

int cmd_equations(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const EquationSet eqs = equation_set(config.profile);
  warn_large_weights(eqs, err);
  switch (config.format) {
    case OutputFormat::Plain:
      write_plain(eqs, out);
      out << summary_line(eqs) << '\n';
      return kPass;
    case OutputFormat::Json:
      out << to_json(eqs).dump(2) << '\n';
      return kPass;
    case OutputFormat::Macaulay2:
      write_cas_script(eqs, CasDialect::Macaulay2, out);
      return kPass;
    case OutputFormat::Singular:
      write_cas_script(eqs, CasDialect::Singular, out);
      return kPass;
  }
  return kUsage;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<VarietyReport> variety;
  if (config.field) {
    try {
      variety = compare_varieties(config.profile, *config.field, enumeration_options(config));
    } catch (const BudgetExceeded& e) {
      err << "verify: " << e.what() << '\n';
      return kBudget;
    }
  }
  std::vector<CheckRow> rows = symbolic_checks(config.profile);
  if (variety) rows.push_back({"variety q=" + std::to_string(variety->q), variety->passed(), variety_detail(*variety)});

  bool all = true;
  for (const auto& r : rows) all = all && r.passed;

  if (config.format == OutputFormat::Json) {
    ordered_json j;
    j["profile"] = config.profile.sizes();
    ordered_json checks = ordered_json::array();
    for (const auto& r : rows) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    j["checks"] = std::move(checks);
    j["variety"] = variety ? variety->to_json() : ordered_json(nullptr);
    j["passed"] = all;
    out << j.dump(2) << '\n';
  } else {
    out << summary_line(equation_set(config.profile)) << '\n';
    for (const auto& r : rows) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    }
    out << "verify: " << (all ? "all checks passed" : "FAILED") << '\n';
  }
  return all ? kPass : kCheckFailure;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::uint64_t q = config.field.value_or(default_field(config.profile));
  VarietyReport report;
  try {
    report = compare_varieties(config.profile, q, enumeration_options(config));
  } catch (const BudgetExceeded& e) {
    err << "enumerate: " << e.what() << '\n';
    return kBudget;
  }
  if (config.format == OutputFormat::Json) {
    out << report.to_json().dump() << '\n';
  } else {
    out << config.profile.name() << " over F_" << q << ": " << variety_detail(report) << '\n';
    out << (report.passed() ? "V(J) = V(P)" : "V(J) != V(P)") << '\n';
  }
  return report.passed() ? kPass : kCheckFailure;
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CasDialect dialect = CasDialect::Macaulay2;
  if (config.format == OutputFormat::Singular) {
    dialect = CasDialect::Singular;
  } else if (config.format_given && config.format != OutputFormat::Macaulay2) {
    err << "export: format must be m2, singular or cas\n";
    return kUsage;
  }
  const EquationSet eqs = equation_set(config.profile);
  warn_large_weights(eqs, err);
  write_cas_script(eqs, dialect, out);
  return kPass;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream&) {
  struct Row {
    std::string phase;
    double ms;
    std::string detail;
  };
  std::vector<Row> rows;

  auto start = Clock::now();
  const EquationSet eqs = equation_set(config.profile);
  std::size_t terms = 0;
  for (const auto& p : eqs.j_polynomials()) terms += p.size();
  rows.push_back({"construction", ms_since(start), std::to_string(eqs.j_size()) + " generators, " + std::to_string(terms) + " terms"});

  start = Clock::now();
  const auto checks = symbolic_checks(config.profile);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  rows.push_back({"symbolic", ms_since(start), std::to_string(checks.size()) + " checks " + (ok ? "passed" : "FAILED")});

  const std::uint64_t q = config.field.value_or(default_field(config.profile));
  start = Clock::now();
  try {
    const auto report = compare_varieties(config.profile, q, enumeration_options(config));
    ok = ok && report.passed();
    rows.push_back({"enumeration", ms_since(start), "q=" + std::to_string(q) + " " + variety_detail(report)});
  } catch (const BudgetExceeded& e) {
    rows.push_back({"enumeration", 0.0, "q=" + std::to_string(q) + " skipped: " + e.what()});
  }

  if (config.format == OutputFormat::Json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) j.push_back({{"phase", r.phase}, {"ms", r.ms}, {"detail", r.detail}});
    out << j.dump(2) << '\n';
  } else {
    out << "phase,ms,detail\n";
    for (const auto& r : rows) out << r.phase << ',' << r.ms << ',' << r.detail << '\n';
  }
  return ok ? kPass : kCheckFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const UsageError& e) {
    (e.code == kPass ? out : err) << e.message << '\n';
    return e.code;
  }

  std::ostringstream buffer;
  std::ostream& sink = config.out_path ? static_cast<std::ostream&>(buffer) : out;
  int code = kUsage;
  try {
    switch (config.command) {
      case Command::Equations:
        code = cmd_equations(config, sink, err);
        break;
      case Command::Verify:
        code = cmd_verify(config, sink, err);
        break;
      case Command::Enumerate:
        code = cmd_enumerate(config, sink, err);
        break;
      case Command::Export:
        code = cmd_export(config, sink, err);
        break;
      case Command::Bench:
        code = cmd_bench(config, sink, err);
        break;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.out_path << " for writing\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace rns::cli
