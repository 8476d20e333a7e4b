#include "rns/weights.hpp"

#include <numeric>

#include "rns/domain.hpp"

namespace rns {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) throw DomainError("weight degree r_k overflows 64 bits");
  return out;
}

}  // namespace

std::vector<WeightGroup> weight_groups(const ScrollProfile& profile) {
  std::vector<WeightGroup> groups;
  const unsigned d = static_cast<unsigned>(profile.d());
  if (d < 2) return groups;
  for (unsigned k = 3; k <= 2 * d - 1; ++k) {
    WeightGroup g;
    g.weight = k;
    g.degree = 1;
    for (unsigned i = 1; 2 * i < k; ++i) {
      const unsigned j = k - i;
      if (j > d) continue;
      WeightedPair pair{i, j, bridge_meta(profile.size(i), profile.size(j)), 0};
      g.degree = checked_lcm(g.degree, pair.meta.degree());
      g.pairs.push_back(pair);
    }
    for (auto& pair : g.pairs) pair.exponent = g.degree / pair.meta.degree();
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace rns
