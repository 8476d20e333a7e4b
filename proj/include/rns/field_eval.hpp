#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rns/equations.hpp"

namespace rns {

/// An F_q polynomial flattened for repeated evaluation at points given
/// as coordinate vectors.
class CompiledPolynomial {
 public:
  /// p must be over F_q; every variable must appear in coords.
  CompiledPolynomial(const Polynomial& p, std::span<const VarId> coords);

  std::uint64_t evaluate(std::span<const std::uint64_t> point, const PrimeField& field) const;
  std::size_t terms() const noexcept { return coeffs_.size(); }

 private:
  std::vector<std::uint64_t> coeffs_;
  std::vector<std::uint32_t> offsets_;  // term k owns factors_[offsets_[k], offsets_[k+1])
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors_;
};

/// Sum of compiled polynomials raised to exponents; a plain polynomial is
/// a single part with exponent 1.
class CompiledGenerator {
 public:
  CompiledGenerator(std::string label, std::vector<std::pair<CompiledPolynomial, std::uint64_t>> parts);

  std::uint64_t evaluate(std::span<const std::uint64_t> point, const PrimeField& field) const;
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
  std::vector<std::pair<CompiledPolynomial, std::uint64_t>> parts_;
};

/// J generators reduced mod q: curve equations as-is, each G_k as the sum
/// of its reduced bridges raised to c_{i,j}.
std::vector<CompiledGenerator> compile_j(const EquationSet& eqs, std::uint64_t q);
/// Same, but each G_k is expanded over Z before reduction.
std::vector<CompiledGenerator> compile_j_expanded(const EquationSet& eqs, std::uint64_t q);
std::vector<CompiledGenerator> compile_prime(const EquationSet& eqs, std::uint64_t q);

}  // namespace rns
