#include "rns/var_id.hpp"

#include "rns/domain.hpp"

namespace rns {

VarId VarId::scroll(unsigned block, unsigned slot) {
  if (block == 0 || block > kMaxBlock || slot > kMaxSlot) {
    throw DomainError("scroll variable index out of range: x[" + std::to_string(block) + "][" +
                      std::to_string(slot) + "]");
  }
  return VarId((static_cast<std::uint32_t>(block) << 16) | slot);
}

VarId VarId::aux(AuxName name, unsigned index) {
  if (index > kMaxSlot) throw DomainError("auxiliary variable index out of range");
  return VarId(kAuxBit | (static_cast<std::uint32_t>(name) << 16) | index);
}

char aux_letter(AuxName name) {
  constexpr char letters[] = {'s', 't', 'u', 'v', 'z', 'w'};
  return letters[static_cast<unsigned>(name)];
}

std::string to_string(VarId v) {
  if (v.is_scroll()) {
    return "x[" + std::to_string(v.block()) + "][" + std::to_string(v.slot()) + "]";
  }
  std::string out(1, aux_letter(v.aux_name()));
  if (v.aux_index() != 0) out += "[" + std::to_string(v.aux_index()) + "]";
  return out;
}

}  // namespace rns
