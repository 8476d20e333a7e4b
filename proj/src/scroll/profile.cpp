#include "rns/profile.hpp"

#include <numeric>
#include <sstream>

#include "rns/domain.hpp"

namespace rns {

ScrollProfile::ScrollProfile(std::vector<unsigned> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw DomainError("scroll profile needs at least one block");
  if (sizes_.size() > VarId::kMaxBlock) throw DomainError("too many blocks");
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] == 0) throw DomainError("block " + std::to_string(i + 1) + " has size 0; sizes must be positive");
    if (sizes_[i] >= VarId::kMaxSlot) throw DomainError("block " + std::to_string(i + 1) + " is too large");
  }
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    offsets_.push_back(variables_.size());
    for (unsigned j = 0; j <= sizes_[i]; ++j) variables_.push_back(VarId::scroll(static_cast<unsigned>(i + 1), j));
  }
}

std::size_t ScrollProfile::sum_sizes() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

std::size_t ScrollProfile::index_of(VarId v) const {
  if (!v.is_scroll() || v.block() > d() || v.slot() > sizes_[v.block() - 1]) {
    throw DomainError("variable " + to_string(v) + " does not belong to " + name());
  }
  return offsets_[v.block() - 1] + v.slot();
}

std::string ScrollProfile::name() const {
  std::string out = "S(";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out + ")";
}

ScrollProfile parse_profile(const std::string& text) {
  std::vector<unsigned> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      throw DomainError("invalid profile entry '" + item + "'");
    }
    if (used != item.size() || value <= 0 || value >= static_cast<long>(VarId::kMaxSlot)) {
      throw DomainError("invalid profile entry '" + item + "'; expected a positive integer");
    }
    sizes.push_back(static_cast<unsigned>(value));
  }
  if (!text.empty() && text.back() == ',') throw DomainError("trailing comma in profile");
  return ScrollProfile(std::move(sizes));
}

}  // namespace rns
