#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rns/polynomial.hpp"

namespace rns {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Names and limits used when reading polynomial text.
struct ParseContext {
  Domain domain = Domain::integers();
  /// Block sizes n_1..n_d. When set, x[i][j] must satisfy 1 <= i <= d and j <= n_i.
  std::optional<std::vector<unsigned>> block_sizes;
  bool allow_aux = true;
  std::uint32_t max_exponent = 1u << 20;
};

/// Reads the canonical grammar: signed terms, each an optional coefficient
/// followed by '*'-separated factors x[i][j]^e, s, t, u[i], v, z, w.
Polynomial parse_polynomial(std::string_view text, const ParseContext& ctx = {});
inline Polynomial parse_poly(std::string_view text, const ParseContext& ctx = {}) {
  return parse_polynomial(text, ctx);
}

using VariableNamer = std::function<std::string(VarId)>;

/// Canonical text form; parse_polynomial(to_string(p)) == p.
std::string to_string(const Polynomial& p);
/// Same layout with caller-chosen variable spellings (used for CAS dialects).
std::string format_polynomial(const Polynomial& p, const VariableNamer& namer);

}  // namespace rns
