#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rns {

/// Raised for mismatched coefficient domains, invalid moduli, and other
/// argument-domain violations (e.g. binomial(m, a) with a > m).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Largest modulus accepted for prime fields; products stay within 128 bits.
inline constexpr std::uint64_t kMaxFieldModulus = (std::uint64_t{1} << 63) - 1;

/// Coefficient ring of a polynomial: Z, Q, or F_p.
class Domain {
 public:
  enum class Kind : std::uint8_t { Integer, Rational, PrimeField };

  static Domain integers() { return Domain(Kind::Integer, 0); }
  static Domain rationals() { return Domain(Kind::Rational, 0); }
  /// Throws DomainError unless p is a prime not exceeding kMaxFieldModulus.
  static Domain prime_field(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return kind_ != Kind::Integer; }

  /// Brings a value into canonical form for this domain: integral for Z
  /// (throws on a proper fraction), reduced residue 0 <= c < p for F_p.
  void normalize(mpq_class& c) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  std::uint64_t modulus_;
};

std::string to_string(const Domain& d);

/// Exact binomial coefficient C(m, a). Throws DomainError when a > m.
mpz_class binomial(unsigned long m, unsigned long a);

/// Arithmetic in F_p on machine words.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return (s >= p_ || s < a) ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const noexcept;

  /// Residue of an exact integer.
  std::uint64_t reduce(const mpz_class& z) const;
  /// Residue of an exact rational; throws DomainError if the denominator vanishes mod p.
  std::uint64_t reduce(const mpq_class& c) const;

 private:
  std::uint64_t p_;
};

}  // namespace rns
