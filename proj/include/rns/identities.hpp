#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rns/equations.hpp"

namespace rns {

/// Result of an exact polynomial identity check; residual is zero on success.
struct IdentityCheck {
  bool passed = false;
  Polynomial residual;
};

/// The scroll parametrization x[i][j] -> u[i] * s^{n_i - j} * t^j.
struct ParamMap {
  ScrollProfile profile;
  Substitution images;
};

ParamMap scroll_parametrization(const ScrollProfile& profile);

/// bridge(a,b) under X_j -> u s^{a-j} t^j, Y_h -> v s^{b-h} t^h must vanish.
IdentityCheck check_property1(unsigned a, unsigned b);

/// bridge(a,b) under X_j -> s^{a-j} t^j, Y_h -> z^{b-h} w^h must equal (tz - sw)^m.
/// The residual is (substituted bridge) - (tz - sw)^m.
IdentityCheck check_property2(unsigned a, unsigned b);

struct GeneratorCheck {
  std::string label;
  bool passed = false;
  Polynomial residual;
};

struct ParametrizationReport {
  std::vector<GeneratorCheck> checks;  // J generators, then minors
  bool passed() const noexcept;
  std::size_t failures() const noexcept;
};

/// Every J generator and every minor must vanish identically under the
/// scroll parametrization. G_k beyond the blow-up threshold are checked
/// through their bridge parts, which is the same identity.
ParametrizationReport check_parametrization(const ScrollProfile& profile,
                                            std::uint64_t expand_threshold = 64);

/// alpha_{i,j} = t[i] u[j] - u[i] t[j], the 2x2 minor on columns i, j of
/// the generic 2 x d matrix with rows (t[1..d]) and (u[1..d]).
Polynomial minor_symbol(unsigned i, unsigned j);

struct PluckerReport {
  std::size_t quadruples = 0;
  std::vector<std::array<unsigned, 4>> failures;  // (a, i, j, b)
  bool passed() const noexcept { return failures.empty(); }
};

/// Checks alpha_{i,j} alpha_{a,b} - alpha_{a,j} alpha_{i,b} + alpha_{a,i} alpha_{j,b} = 0
/// for every a < i < j < b <= d.
PluckerReport plucker_identity(unsigned d);

}  // namespace rns
