#include "rns/monomial.hpp"

#include <algorithm>
#include <limits>

#include "rns/domain.hpp"

namespace rns {

namespace {

std::uint32_t checked_exp(std::uint64_t e) {
  if (e > std::numeric_limits<std::uint32_t>::max()) throw DomainError("exponent overflow");
  return static_cast<std::uint32_t>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<Factor> factors) : factors_(factors) { normalize(); }

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) { normalize(); }

Monomial Monomial::variable(VarId v, std::uint32_t exp) { return Monomial({{v, exp}}); }

void Monomial::normalize() {
  std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (const auto& [v, e] : factors_) {
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second = checked_exp(std::uint64_t{merged.back().second} + e);
    } else {
      merged.emplace_back(v, e);
    }
  }
  std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
  factors_ = std::move(merged);
  degree_ = 0;
  for (const auto& f : factors_) degree_ += f.second;
}

std::uint32_t Monomial::exponent(VarId v) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t Monomial::block_degree(unsigned block) const noexcept {
  std::uint64_t deg = 0;
  for (const auto& [v, e] : factors_) {
    if (v.is_scroll() && v.block() == block) deg += e;
  }
  return deg;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, checked_exp(std::uint64_t{i->second} + j->second));
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial Monomial::pow(std::uint32_t e) const {
  Monomial out;
  if (e == 0) return out;
  out.factors_ = factors_;
  for (auto& f : out.factors_) f.second = checked_exp(std::uint64_t{f.second} * e);
  out.degree_ = degree_ * e;
  return out;
}

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree() ? 1 : -1;
  // Scan from the smallest variable (last in VarId order) upward; the first
  // difference decides, and the smaller exponent wins.
  auto i = a.factors().rbegin();
  auto j = b.factors().rbegin();
  while (i != a.factors().rend() || j != b.factors().rend()) {
    if (j == b.factors().rend() || (i != a.factors().rend() && j->first < i->first)) {
      return -1;  // a has a positive exponent where b has zero
    }
    if (i == a.factors().rend() || i->first < j->first) {
      return 1;
    }
    if (i->second != j->second) return i->second < j->second ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

}  // namespace rns
