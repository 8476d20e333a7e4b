#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rns/polynomial.hpp"
#include "rns/profile.hpp"

namespace rns {

/// The 2 x (sum n_i) matrix of scroll variables; block i contributes
/// columns (x[i][j], x[i][j+1]) for j = 0..n_i-1.
struct CatalecticantMatrix {
  ScrollProfile profile;
  std::array<std::vector<VarId>, 2> rows;

  std::size_t columns() const noexcept { return rows[0].size(); }
};

CatalecticantMatrix catalecticant(const ScrollProfile& profile);

struct Minor {
  std::size_t left;   // column c1
  std::size_t right;  // column c2 > c1
  Polynomial poly;    // M[0][c1]*M[1][c2] - M[1][c1]*M[0][c2]
};

/// All 2x2 minors, column pairs in lexicographic order. With dedup set,
/// syntactically equal minors (up to sign) after the first are dropped.
std::vector<Minor> minors_2x2(const CatalecticantMatrix& m, bool dedup = false);

}  // namespace rns
