#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rns/profile.hpp"

namespace rns::cli {

enum class Command { Equations, Verify, Enumerate, Export, Bench };
enum class OutputFormat { Plain, Json, Macaulay2, Singular };

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsage = 2, kBudget = 3 };

/// Environment variable holding the default evaluation budget.
inline constexpr const char* kBudgetEnv = "RNS_BUDGET";

struct RunConfig {
  ScrollProfile profile{std::vector<unsigned>{1}};
  Command command = Command::Equations;
  std::optional<std::uint64_t> field;
  OutputFormat format = OutputFormat::Plain;
  bool format_given = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = 0;
  std::optional<std::string> out_path;
  unsigned threads = 0;
};

/// Thrown for malformed invocations; carries the message shown to the user.
struct UsageError {
  std::string message;
  int code = kUsage;
};

/// Parses argv (argv[0] is the program name). Throws UsageError on invalid
/// input; --help is reported as UsageError with code kPass and the help text.
RunConfig parse_args(const std::vector<std::string>& args);

/// Field used when --field is absent: 3, or 2 once N >= 12.
std::uint64_t default_field(const ScrollProfile& profile);

}  // namespace rns::cli
