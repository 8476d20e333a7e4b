#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "rns/domain.hpp"
#include "rns/monomial.hpp"

namespace rns {

/// Sparse multivariate polynomial over Z, Q, or F_p.
///
/// Terms are kept in canonical form: no zero coefficients, coefficients
/// normalized for the domain, iterated in descending grevlex order.
/// Values are immutable once built; all operations return new polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpq_class, GrevlexDescending>;

  explicit Polynomial(Domain domain = Domain::integers()) : domain_(domain) {}

  static Polynomial constant(const mpq_class& c, Domain domain = Domain::integers());
  static Polynomial variable(VarId v, Domain domain = Domain::integers());
  static Polynomial term(const mpq_class& c, const Monomial& m, Domain domain = Domain::integers());
  /// Builds from arbitrary (coefficient, monomial) pairs; duplicates are merged.
  static Polynomial from_terms(const std::vector<std::pair<mpq_class, Monomial>>& terms,
                               Domain domain = Domain::integers());

  const Domain& domain() const noexcept { return domain_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of m (zero if absent).
  mpq_class coefficient(const Monomial& m) const;

  /// Maximum total degree; -1 for the zero polynomial.
  long total_degree() const noexcept;
  /// True for the zero polynomial and for polynomials whose terms share one degree.
  bool is_homogeneous() const noexcept;
  std::set<VarId> variables() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial scaled(const mpq_class& c) const;

  /// Binary exponentiation; pow(0) is 1.
  Polynomial pow(std::uint64_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& m, const mpq_class& c);
  Domain domain_;
  TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial poly_pow(const Polynomial& p, std::uint64_t e) { return p.pow(e); }

using Substitution = std::map<VarId, Polynomial>;

enum class SubstitutionMode { IdentityForUnmapped, Strict };

/// Ring homomorphism image of p under sigma. Unmapped variables are kept
/// as-is unless mode is Strict, in which case they raise DomainError.
Polynomial substitute(const Polynomial& p, const Substitution& sigma,
                      SubstitutionMode mode = SubstitutionMode::IdentityForUnmapped);

/// Coefficientwise reduction of an integer polynomial into F_q.
Polynomial reduce_mod(const Polynomial& p, std::uint64_t q);

/// Lifts integer coefficients into Q (identity on values).
Polynomial to_rationals(const Polynomial& p);

using FieldPoint = std::map<VarId, std::uint64_t>;

/// Evaluates an F_p polynomial at a point given as residues. Throws
/// DomainError on a non-field polynomial or an unmapped variable.
std::uint64_t eval_point(const Polynomial& p, const FieldPoint& point);

}  // namespace rns
