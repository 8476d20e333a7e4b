#pragma once

#include <cstdint>

#include "rns/polynomial.hpp"

namespace rns {

/// Arithmetic data of the bridge B_{a,b}: m = lcm(a, b) = a*p = b*q.
struct BridgeMeta {
  unsigned a = 0;
  unsigned b = 0;
  unsigned m = 0;
  unsigned p = 0;
  unsigned q = 0;

  unsigned degree() const noexcept { return p + q; }
  friend bool operator==(const BridgeMeta&, const BridgeMeta&) = default;
};

/// Throws DomainError when a or b is zero.
BridgeMeta bridge_meta(unsigned a, unsigned b);

struct Bridge {
  BridgeMeta meta;
  Polynomial poly;
};

/// Rational normal curve equation F_i in the variables x[block][0..n]:
///   sum_{k=0}^{i} (-1)^k C(i,k) X_{i+1}^{i-k} X_k X_i^k,  1 <= i <= n-1.
Polynomial curve_equation(unsigned n, unsigned i, unsigned block = 1);

/// The bridge between blocks x_block (size a) and y_block (size b):
///   sum_{k=0}^{m} (-1)^k C(m,k) X_{a-c}^{p-r} X_{a-c-1}^r Y_e^{q-f} Y_{e+1}^f
/// with k = c*p + r = e*q + f. Zero-exponent factors are never materialized.
Bridge bridge(unsigned a, unsigned b, unsigned x_block = 1, unsigned y_block = 2);

/// The same polynomial built without divisions: a descending list of
/// degree-p X-monomials zipped against an ascending list of degree-q
/// Y-monomials.
Polynomial bridge_via_lists(unsigned a, unsigned b, unsigned x_block = 1, unsigned y_block = 2);

}  // namespace rns
