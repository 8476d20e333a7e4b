#include "rns/catalecticant.hpp"

namespace rns {

CatalecticantMatrix catalecticant(const ScrollProfile& profile) {
  CatalecticantMatrix m{profile, {}};
  for (unsigned i = 1; i <= profile.d(); ++i) {
    for (unsigned j = 0; j < profile.size(i); ++j) {
      m.rows[0].push_back(VarId::scroll(i, j));
      m.rows[1].push_back(VarId::scroll(i, j + 1));
    }
  }
  return m;
}

std::vector<Minor> minors_2x2(const CatalecticantMatrix& m, bool dedup) {
  std::vector<Minor> out;
  const std::size_t cols = m.columns();
  out.reserve(cols * (cols - 1) / 2);
  for (std::size_t c1 = 0; c1 < cols; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < cols; ++c2) {
      const Monomial main = Monomial({{m.rows[0][c1], 1}, {m.rows[1][c2], 1}});
      const Monomial anti = Monomial({{m.rows[1][c1], 1}, {m.rows[0][c2], 1}});
      Polynomial poly = Polynomial::from_terms({{1, main}, {-1, anti}});
      if (dedup) {
        bool seen = false;
        for (const auto& prev : out) {
          if (prev.poly == poly || prev.poly == -poly) {
            seen = true;
            break;
          }
        }
        if (seen) continue;
      }
      out.push_back({c1, c2, std::move(poly)});
    }
  }
  return out;
}

}  // namespace rns
