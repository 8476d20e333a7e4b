#include "rns/cli/config.hpp"

#include <cstdlib>

#include <CLI11.hpp>

#include "rns/domain.hpp"
#include "rns/variety.hpp"

namespace rns::cli {

namespace {

std::uint64_t budget_from_env() {
  const char* raw = std::getenv(kBudgetEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) throw UsageError{std::string(kBudgetEnv) + " must be a positive integer"};
  return value;
}

}  // namespace

std::uint64_t default_field(const ScrollProfile& profile) { return profile.ambient_dimension() >= 12 ? 2 : 3; }

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Defining equations of rational normal scrolls and their verification", "rnscroll"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  std::string profile_text;
  std::string format_text;
  std::uint64_t field = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string out_path;
  unsigned threads = 0;

  app.add_option("--profile", profile_text, "Block sizes n1,n2,...,nd (order matters)")->required();
  auto* field_opt = app.add_option("--field", field, "Prime field size q for finite-field checks");
  auto* format_opt = app.add_option("--format", format_text, "plain | json | m2 | singular (cas = m2)");
  auto* seed_opt = app.add_option("--seed", seed, "Seed recorded in reports");
  auto* budget_opt = app.add_option("--budget", budget, "Cap on generator evaluations during enumeration");
  auto* out_opt = app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--threads", threads, "Worker threads for enumeration (0 = all cores)");

  struct Entry {
    const char* name;
    Command command;
    const char* description;
  };
  const Entry commands[] = {
      {"equations", Command::Equations, "Print the N-2 generators of J"},
      {"verify", Command::Verify, "Run symbolic checks, plus point comparison when --field is given"},
      {"enumerate", Command::Enumerate, "Compare V(J) and V(P) over F_q"},
      {"export", Command::Export, "Write a computer-algebra script for J and P"},
      {"bench", Command::Bench, "Time construction, symbolic checks and enumeration"}};
  for (const auto& entry : commands) app.add_subcommand(entry.name, entry.description);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw UsageError{app.help(), kPass};
  } catch (const CLI::ParseError& e) {
    throw UsageError{e.what()};
  }

  RunConfig config;
  try {
    config.profile = parse_profile(profile_text);
  } catch (const DomainError& e) {
    throw UsageError{std::string("--profile: ") + e.what()};
  }
  for (const auto& entry : commands) {
    if (app.got_subcommand(entry.name)) config.command = entry.command;
  }
  if (*field_opt) {
    if (!is_prime(field)) throw UsageError{"--field: " + std::to_string(field) + " is not prime"};
    config.field = field;
  }
  if (*format_opt) {
    config.format_given = true;
    if (format_text == "plain") {
      config.format = OutputFormat::Plain;
    } else if (format_text == "json") {
      config.format = OutputFormat::Json;
    } else if (format_text == "m2" || format_text == "macaulay2" || format_text == "cas") {
      config.format = OutputFormat::Macaulay2;
    } else if (format_text == "singular") {
      config.format = OutputFormat::Singular;
    } else {
      throw UsageError{"--format: unknown format '" + format_text + "'"};
    }
  }
  if (*seed_opt) config.seed = seed;
  if (*budget_opt) {
    if (budget == 0) throw UsageError{"--budget must be positive"};
    config.budget = budget;
  } else {
    config.budget = budget_from_env();
  }
  if (*out_opt) config.out_path = out_path;
  config.threads = threads;
  return config;
}

}  // namespace rns::cli
