#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace rns {

/// Auxiliary parameter names, in their fixed sort order.
enum class AuxName : std::uint8_t { s = 0, t = 1, u = 2, v = 3, z = 4, w = 5 };

/// Identifies one polynomial variable.
///
/// Scroll variables are X_{block,slot} with 1-based block and 0-based slot.
/// Auxiliary parameters (s, t, u[i], v, z, w) live in a second namespace
/// that sorts after every scroll variable. The total order is
/// block-major, then slot; auxiliaries are ordered by name, then index.
class VarId {
 public:
  static constexpr unsigned kMaxBlock = (1u << 15) - 1;
  static constexpr unsigned kMaxSlot = (1u << 16) - 1;

  static VarId scroll(unsigned block, unsigned slot);
  /// Index 0 means "unindexed" (s, t, v, z, w); u[i] and t[i] use i >= 1.
  static VarId aux(AuxName name, unsigned index = 0);

  bool is_scroll() const noexcept { return (key_ & kAuxBit) == 0; }
  bool is_aux() const noexcept { return !is_scroll(); }

  unsigned block() const noexcept { return (key_ >> 16) & 0x7fffu; }
  unsigned slot() const noexcept { return key_ & 0xffffu; }
  AuxName aux_name() const noexcept { return static_cast<AuxName>((key_ >> 16) & 0xffu); }
  unsigned aux_index() const noexcept { return key_ & 0xffffu; }

  std::uint32_t key() const noexcept { return key_; }

  friend auto operator<=>(const VarId&, const VarId&) = default;

 private:
  static constexpr std::uint32_t kAuxBit = 1u << 31;
  explicit constexpr VarId(std::uint32_t key) : key_(key) {}
  std::uint32_t key_;
};

char aux_letter(AuxName name);

/// Canonical spelling: x[i][j], s, t, u[i], v, z, w (t[i] for indexed t).
std::string to_string(VarId v);

}  // namespace rns
