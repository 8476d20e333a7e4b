#include "rns/domain.hpp"

#include <array>

namespace rns {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const mpz_class& z, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t residue(const mpq_class& c, std::uint64_t p) {
  const std::uint64_t num = residue(c.get_num(), p);
  if (c.get_den() == 1) return num;
  const std::uint64_t den = residue(c.get_den(), p);
  if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p));
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

// Deterministic Miller-Rabin; these bases cover all 64-bit integers.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Domain Domain::prime_field(std::uint64_t p) {
  if (p > kMaxFieldModulus || !is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Domain(Kind::PrimeField, p);
}

void Domain::normalize(mpq_class& c) const {
  switch (kind_) {
    case Kind::Integer:
      if (c.get_den() != 1) throw DomainError("non-integral coefficient in Z: " + c.get_str());
      break;
    case Kind::Rational:
      c.canonicalize();
      break;
    case Kind::PrimeField:
      c = static_cast<unsigned long>(residue(c, modulus_));
      break;
  }
}

std::string to_string(const Domain& d) {
  switch (d.kind()) {
    case Domain::Kind::Integer:
      return "Z";
    case Domain::Kind::Rational:
      return "Q";
    case Domain::Kind::PrimeField:
      return "F_" + std::to_string(d.modulus());
  }
  return "?";
}

mpz_class binomial(unsigned long m, unsigned long a) {
  if (a > m) {
    throw DomainError("binomial(" + std::to_string(m) + ", " + std::to_string(a) + "): lower index exceeds upper");
  }
  if (a > m - a) a = m - a;
  // C(m, k) = C(m, k-1) * (m-k+1) / k; every intermediate value is an exact integer.
  mpz_class result = 1;
  for (unsigned long k = 1; k <= a; ++k) {
    result *= m - k + 1;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), k);
  }
  return result;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p > kMaxFieldModulus || !is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not a supported prime");
  }
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const noexcept { return powmod(base, e, p_); }

std::uint64_t PrimeField::reduce(const mpz_class& z) const { return residue(z, p_); }

std::uint64_t PrimeField::reduce(const mpq_class& c) const { return residue(c, p_); }

}  // namespace rns
