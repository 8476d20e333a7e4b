#include "rns/bridge.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace rns {

namespace {

Monomial power_pair(unsigned block, unsigned hi, std::uint32_t hi_exp, unsigned lo, std::uint32_t lo_exp) {
  std::vector<Monomial::Factor> f;
  if (hi_exp) f.emplace_back(VarId::scroll(block, hi), hi_exp);
  if (lo_exp) f.emplace_back(VarId::scroll(block, lo), lo_exp);
  return Monomial(std::move(f));
}

}  // namespace

BridgeMeta bridge_meta(unsigned a, unsigned b) {
  if (a == 0 || b == 0) {
    throw DomainError("bridge sizes must be positive, got (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  const unsigned m = std::lcm(a, b);
  return {a, b, m, m / a, m / b};
}

Polynomial curve_equation(unsigned n, unsigned i, unsigned block) {
  if (i < 1 || i + 1 > n) {
    throw DomainError("curve equation index " + std::to_string(i) + " out of range 1.." + std::to_string(n > 0 ? n - 1 : 0));
  }
  auto X = [block](unsigned j) { return VarId::scroll(block, j); };
  std::vector<std::pair<mpq_class, Monomial>> terms;
  for (unsigned k = 0; k <= i; ++k) {
    mpq_class c(binomial(i, k));
    if (k % 2) c = -c;
    terms.emplace_back(c, Monomial({{X(i + 1), i - k}, {X(k), 1}, {X(i), k}}));
  }
  return Polynomial::from_terms(terms);
}

Bridge bridge(unsigned a, unsigned b, unsigned x_block, unsigned y_block) {
  const BridgeMeta meta = bridge_meta(a, b);
  const unsigned m = meta.m, p = meta.p, q = meta.q;
  std::vector<std::pair<mpq_class, Monomial>> terms;
  terms.reserve(m + 1);
  for (unsigned alpha = 0; alpha <= m; ++alpha) {
    const unsigned c = alpha / p, r = alpha % p;
    const unsigned e = alpha / q, f = alpha % q;
    // r == 0 exactly when X_{a-c-1} would be the sentinel X_{-1}; likewise f for Y_{b+1}.
    const Monomial xs = power_pair(x_block, a - c, p - r, r ? a - c - 1 : 0, r);
    const Monomial ys = power_pair(y_block, e, q - f, f ? e + 1 : 0, f);
    mpq_class coeff(binomial(m, alpha));
    if (alpha % 2) coeff = -coeff;
    terms.emplace_back(coeff, xs * ys);
  }
  return {meta, Polynomial::from_terms(terms)};
}

Polynomial bridge_via_lists(unsigned a, unsigned b, unsigned x_block, unsigned y_block) {
  const BridgeMeta meta = bridge_meta(a, b);

  // X_a^p, X_a^{p-1}X_{a-1}, ..., X_a X_{a-1}^{p-1}, X_{a-1}^p, ..., X_0^p
  std::vector<Monomial> xs;
  for (unsigned top = a; top >= 1; --top) {
    for (unsigned lower = 0; lower < meta.p; ++lower) xs.push_back(power_pair(x_block, top, meta.p - lower, top - 1, lower));
  }
  xs.push_back(power_pair(x_block, 0, meta.p, 0, 0));

  // Y_0^q, Y_0^{q-1}Y_1, ..., Y_{b-1}Y_b^{q-1}, Y_b^q
  std::vector<Monomial> ys;
  for (unsigned low = 0; low < b; ++low) {
    for (unsigned upper = 0; upper < meta.q; ++upper) ys.push_back(power_pair(y_block, low, meta.q - upper, low + 1, upper));
  }
  ys.push_back(power_pair(y_block, b, meta.q, 0, 0));

  std::vector<std::pair<mpq_class, Monomial>> terms;
  mpz_class coeff = 1;  // C(m, k), advanced by the multiplicative recurrence
  for (unsigned k = 0; k <= meta.m; ++k) {
    terms.emplace_back(k % 2 ? mpq_class(-coeff) : mpq_class(coeff), xs[k] * ys[k]);
    coeff = coeff * (meta.m - k) / (k + 1);
  }
  return Polynomial::from_terms(terms);
}

}  // namespace rns
