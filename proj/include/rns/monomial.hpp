#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rns/var_id.hpp"

namespace rns {

/// A power product, stored as (variable, exponent) pairs sorted by VarId.
/// No stored exponent is zero.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  /// Factors may repeat and may carry zero exponents; both are normalized away.
  Monomial(std::initializer_list<Factor> factors);
  explicit Monomial(std::vector<Factor> factors);

  static Monomial variable(VarId v, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint64_t total_degree() const noexcept { return degree_; }
  std::uint32_t exponent(VarId v) const noexcept;

  /// Sum of exponents over scroll variables of one block.
  std::uint64_t block_degree(unsigned block) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial pow(std::uint32_t e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  void normalize();
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

/// Graded reverse-lexicographic comparison, with the first variable in
/// VarId order being the largest. Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

/// Strict weak order placing the grevlex-larger monomial first.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grevlex_compare(a, b) > 0; }
};

}  // namespace rns
