#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rns/var_id.hpp"

namespace rns {

/// Block sizes (n_1, ..., n_d) of a rational normal scroll S_{n_1,...,n_d}.
///
/// The order of the blocks is significant: the weight of a bridge depends
/// on block positions, so profiles are never sorted.
class ScrollProfile {
 public:
  /// Throws DomainError for an empty list or a zero entry.
  explicit ScrollProfile(std::vector<unsigned> sizes);

  std::size_t d() const noexcept { return sizes_.size(); }
  const std::vector<unsigned>& sizes() const noexcept { return sizes_; }
  /// n_i with 1-based i.
  unsigned size(std::size_t block) const { return sizes_.at(block - 1); }
  /// N = sum n_i + d - 1.
  std::size_t ambient_dimension() const noexcept { return variable_count() - 1; }
  /// N + 1 = sum (n_i + 1).
  std::size_t variable_count() const noexcept { return variables_.size(); }
  std::size_t sum_sizes() const noexcept;

  /// Scroll variables in block-major order; coordinate order of points.
  const std::vector<VarId>& variables() const noexcept { return variables_; }
  /// Position of x[i][j] in variables(); throws DomainError if not in the profile.
  std::size_t index_of(VarId v) const;

  std::string name() const;  // "S(2,2,3,4)"

  friend bool operator==(const ScrollProfile& a, const ScrollProfile& b) { return a.sizes_ == b.sizes_; }

 private:
  std::vector<unsigned> sizes_;
  std::vector<VarId> variables_;
  std::vector<std::size_t> offsets_;
};

inline ScrollProfile build_profile(std::vector<unsigned> sizes) { return ScrollProfile(std::move(sizes)); }

/// Parses "2,2,3,4".
ScrollProfile parse_profile(const std::string& text);

}  // namespace rns
