#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rns/bridge.hpp"
#include "rns/catalecticant.hpp"
#include "rns/weights.hpp"

namespace rns {

/// Callback receiving construction warnings.
using WarningSink = std::function<void(const std::string&)>;

struct ConstructionOptions {
  /// g_polynomial warns when r_k exceeds this degree.
  std::uint64_t blowup_threshold = 64;
  /// Defaults to writing "warning: ..." on stderr.
  WarningSink warn;
};

struct CurveGenerator {
  unsigned block = 0;
  unsigned index = 0;
  Polynomial poly;
  std::string label;  // "F[1,2]"
};

/// G_k held as its sum of bridge powers; expansion is on demand since
/// r_k can make the expanded form very large.
struct WeightGenerator {
  struct Part {
    WeightedPair pair;
    Polynomial bridge;
  };
  WeightGroup group;
  std::vector<Part> parts;
  std::string label;  // "G[5] = B(2,4)[1,4]^5 + B(2,3)[2,3]^3"

  unsigned weight() const noexcept { return group.weight; }
  std::uint64_t degree() const noexcept { return group.degree; }
  Polynomial expand() const;
};

struct MinorGenerator {
  Minor minor;
  std::string label;  // "M[c1,c2]"
};

/// Generators of J (curve equations, then weight sums) and of the prime
/// ideal of the scroll (2x2 minors).
struct EquationSet {
  ScrollProfile profile;
  std::vector<CurveGenerator> curve_gens;
  std::vector<WeightGenerator> weight_gens;
  std::vector<MinorGenerator> prime_gens;

  /// |J| = sum n_i - d + max(2d - 3, 0).
  std::size_t j_size() const noexcept { return curve_gens.size() + weight_gens.size(); }
  /// J generators in emission order, all expanded.
  std::vector<Polynomial> j_polynomials() const;
  std::vector<std::string> j_labels() const;
  std::vector<Polynomial> prime_polynomials() const;
};

/// Sum over the group's pairs of bridge(n_i, n_j)^{c_{i,j}}, expanded.
Polynomial g_polynomial(const ScrollProfile& profile, const WeightGroup& group,
                        const ConstructionOptions& options = {});

WeightGenerator weight_generator(const ScrollProfile& profile, const WeightGroup& group);

/// All generators for the profile. For d = 1 only the n - 1 curve
/// equations are emitted (rational normal curve case).
EquationSet equation_set(const ScrollProfile& profile, bool dedup_minors = false);

/// Number of J generators, computed without building any polynomial.
std::size_t expected_j_size(const ScrollProfile& profile);

}  // namespace rns
