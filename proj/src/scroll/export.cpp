#include "rns/export.hpp"

#include "rns/poly_json.hpp"
#include "rns/text.hpp"

namespace rns {

std::string summary_line(const EquationSet& eqs) {
  const auto& prof = eqs.profile;
  const std::size_t N = prof.ambient_dimension();
  std::string out = prof.name() + ": d=" + std::to_string(prof.d()) + " N=" + std::to_string(N) +
                    " |J|=" + std::to_string(eqs.j_size()) + " minors=" + std::to_string(eqs.prime_gens.size()) + "; ";
  if (prof.d() >= 2) {
    out += "arithmetic rank = N-2 = " + std::to_string(N - 2) + " (upper bound constructive, lower bound cited)";
  } else {
    out += "rational normal curve, arithmetic rank = n-1 = " + std::to_string(eqs.j_size());
  }
  return out;
}

void write_plain(const EquationSet& eqs, std::ostream& out, bool include_minors) {
  out << "# " << summary_line(eqs) << '\n';
  for (const auto& g : eqs.curve_gens) out << "# " << g.label << '\n' << to_string(g.poly) << '\n';
  for (const auto& g : eqs.weight_gens) out << "# " << g.label << '\n' << to_string(g.expand()) << '\n';
  if (include_minors) {
    for (const auto& g : eqs.prime_gens) out << "# " << g.label << '\n' << to_string(g.minor.poly) << '\n';
  }
}

nlohmann::ordered_json to_json(const EquationSet& eqs) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["profile"] = eqs.profile.sizes();
  j["d"] = eqs.profile.d();
  j["N"] = eqs.profile.ambient_dimension();
  ordered_json gens = ordered_json::array();
  for (const auto& g : eqs.curve_gens) gens.push_back({{"label", g.label}, {"kind", "F"}, {"poly", to_json(g.poly)}});
  for (const auto& g : eqs.weight_gens) {
    gens.push_back({{"label", g.label}, {"kind", "G"}, {"degree", g.degree()}, {"poly", to_json(g.expand())}});
  }
  j["J"] = std::move(gens);
  ordered_json minors = ordered_json::array();
  for (const auto& g : eqs.prime_gens) minors.push_back({{"label", g.label}, {"poly", to_json(g.minor.poly)}});
  j["P"] = std::move(minors);
  return j;
}

CasDialect parse_dialect(const std::string& name) {
  if (name == "m2" || name == "macaulay2" || name == "cas") return CasDialect::Macaulay2;
  if (name == "singular") return CasDialect::Singular;
  throw DomainError("unknown script dialect '" + name + "' (expected m2 or singular)");
}

namespace {

void write_ideal_body(const std::vector<Polynomial>& gens, const VariableNamer& namer, std::ostream& out) {
  if (gens.empty()) out << "  0\n";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out << "  " << format_polynomial(gens[i], namer) << (i + 1 < gens.size() ? "," : "") << '\n';
  }
}

}  // namespace

void write_cas_script(const EquationSet& eqs, CasDialect dialect, std::ostream& out) {
  const auto j_gens = eqs.j_polynomials();
  const auto p_gens = eqs.prime_polynomials();
  const auto& vars = eqs.profile.variables();

  if (dialect == CasDialect::Macaulay2) {
    const VariableNamer namer = [](VarId v) {
      return "x_(" + std::to_string(v.block()) + "," + std::to_string(v.slot()) + ")";
    };
    out << "-- " << summary_line(eqs) << '\n';
    out << "R = QQ[";
    for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << namer(vars[i]);
    out << "];\n";
    out << "J = ideal(\n";
    write_ideal_body(j_gens, namer, out);
    out << ");\n";
    out << "P = ideal(\n";
    write_ideal_body(p_gens, namer, out);
    out << ");\n";
    out << "print(radical J == P);\n";
    return;
  }

  const VariableNamer namer = [](VarId v) {
    return "x(" + std::to_string(v.block()) + ")(" + std::to_string(v.slot()) + ")";
  };
  out << "// " << summary_line(eqs) << '\n';
  out << "LIB \"primdec.lib\";\n";
  out << "ring R = 0,(";
  for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << namer(vars[i]);
  out << "),dp;\n";
  out << "ideal J =\n";
  write_ideal_body(j_gens, namer, out);
  out << ";\n";
  out << "ideal P =\n";
  write_ideal_body(p_gens, namer, out);
  out << ";\n";
  out << "ideal rJ = radical(J);\n";
  out << "int same = (size(reduce(rJ, std(P))) == 0) && (size(reduce(P, std(rJ))) == 0);\n";
  out << "print(same);\n";
}

}  // namespace rns
