#pragma once

#include <cstdint>
#include <vector>

#include "rns/bridge.hpp"
#include "rns/profile.hpp"

namespace rns {

/// One bridge B_{n_i,n_j} inside a weight group, with its exponent.
struct WeightedPair {
  unsigned i = 0;  // X-side block
  unsigned j = 0;  // Y-side block, i < j
  BridgeMeta meta;
  std::uint64_t exponent = 0;  // c_{i,j} = r_k / (p + q)

  /// e_{i,j} = m_{i,j} * c_{i,j}
  std::uint64_t alpha_exponent() const noexcept { return meta.m * exponent; }
};

/// Bridges of weight k = i + j, balanced to the common degree r_k.
struct WeightGroup {
  unsigned weight = 0;
  std::vector<WeightedPair> pairs;  // increasing i
  std::uint64_t degree = 0;         // r_k = lcm of (p + q) over pairs
};

/// Groups for k = 3..2d-1 in increasing order; empty when d < 2.
std::vector<WeightGroup> weight_groups(const ScrollProfile& profile);

}  // namespace rns
