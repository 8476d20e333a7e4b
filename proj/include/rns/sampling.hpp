#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rns/variety.hpp"

namespace rns {

/// Coordinates u_i s^{n_i - j} t^j, block-major.
ProjectivePoint scroll_point(const ScrollProfile& profile, const std::vector<std::uint64_t>& u, std::uint64_t s,
                             std::uint64_t t, const PrimeField& field);

struct SamplingReport {
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;  // draws giving the zero tuple
  std::uint64_t failures = 0;
  std::optional<ProjectivePoint> witness;
  std::string failing_label;
  std::uint64_t seed = 0;

  bool passed() const noexcept { return failures == 0; }
};

/// Evaluates every J generator at random scroll points over F_q.
SamplingReport sample_scroll_points(const ScrollProfile& profile, std::uint64_t q, std::uint64_t trials,
                                    std::uint64_t seed);

enum class IdentityVerdict { ProbablyEqual, DefinitelyDifferent };

struct IdentityTestResult {
  IdentityVerdict verdict = IdentityVerdict::ProbablyEqual;
  std::optional<FieldPoint> witness;  // set when definitely different
  long degree = 0;                    // max of the input degrees, bounding deg(p - r)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Chance that unequal inputs all evaluate equal: (degree / q)^trials.
  double failure_bound = 0;
};

/// Randomized identity test of integer (or rational) polynomials over F_q.
/// Refuses with DomainError unless q is prime and q > safety_factor * degree.
IdentityTestResult schwartz_zippel_equal(const Polynomial& p, const Polynomial& r, std::uint64_t q,
                                         std::uint64_t trials, std::uint64_t seed, unsigned safety_factor = 2);

}  // namespace rns
