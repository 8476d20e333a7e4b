#include "rns/polynomial.hpp"

#include <unordered_map>

namespace rns {

namespace {

void require_same_domain(const Polynomial& a, const Polynomial& b) {
  if (!(a.domain() == b.domain())) {
    throw DomainError("coefficient domain mismatch: " + to_string(a.domain()) + " vs " + to_string(b.domain()));
  }
}

}  // namespace

Polynomial Polynomial::constant(const mpq_class& c, Domain domain) { return term(c, Monomial{}, domain); }

Polynomial Polynomial::variable(VarId v, Domain domain) { return term(1, Monomial::variable(v), domain); }

Polynomial Polynomial::term(const mpq_class& c, const Monomial& m, Domain domain) {
  Polynomial p(domain);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::from_terms(const std::vector<std::pair<mpq_class, Monomial>>& terms, Domain domain) {
  Polynomial p(domain);
  for (const auto& [c, m] : terms) p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  mpq_class value = c;
  domain_.normalize(value);
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (inserted) return;
  it->second += value;
  domain_.normalize(it->second);
  if (it->second == 0) terms_.erase(it);
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

long Polynomial::total_degree() const noexcept {
  // Descending grevlex puts a maximal-degree monomial first.
  return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.total_degree());
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto deg = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() != deg) return false;
  }
  return true;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vars.insert(f.first);
  }
  return vars;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(domain_);
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_domain(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out += b;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_domain(a, b);
  Polynomial out(a.domain());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  Polynomial out(domain_);
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(1, domain_);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const Substitution& sigma, SubstitutionMode mode) {
  for (const auto& [v, image] : sigma) {
    if (!(image.domain() == p.domain())) {
      throw DomainError("substitution image for " + to_string(v) + " lives in " + to_string(image.domain()));
    }
  }
  // Powers of each image are computed once and reused across terms.
  std::map<std::pair<VarId, std::uint32_t>, Polynomial> power_cache;
  auto image_power = [&](VarId v, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    if (auto it = power_cache.find(key); it != power_cache.end()) return it->second;
    auto img = sigma.find(v);
    Polynomial base = img != sigma.end() ? img->second : Polynomial::variable(v, p.domain());
    return power_cache.emplace(key, base.pow(e)).first->second;
  };

  Polynomial out(p.domain());
  for (const auto& [m, c] : p.terms()) {
    Polynomial prod = Polynomial::constant(c, p.domain());
    for (const auto& [v, e] : m.factors()) {
      if (mode == SubstitutionMode::Strict && !sigma.contains(v)) {
        throw DomainError("no image for variable " + to_string(v));
      }
      prod = prod * image_power(v, e);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

Polynomial reduce_mod(const Polynomial& p, std::uint64_t q) {
  if (p.domain().kind() != Domain::Kind::Integer) {
    throw DomainError("reduce_mod expects an integer polynomial, got " + to_string(p.domain()));
  }
  const Domain target = Domain::prime_field(q);
  std::vector<std::pair<mpq_class, Monomial>> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(c, m);
  return Polynomial::from_terms(terms, target);
}

Polynomial to_rationals(const Polynomial& p) {
  if (p.domain().kind() == Domain::Kind::PrimeField) throw DomainError("cannot lift F_p coefficients to Q");
  std::vector<std::pair<mpq_class, Monomial>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(c, m);
  return Polynomial::from_terms(terms, Domain::rationals());
}

std::uint64_t eval_point(const Polynomial& p, const FieldPoint& point) {
  if (p.domain().kind() != Domain::Kind::PrimeField) {
    throw DomainError("eval_point expects an F_p polynomial, got " + to_string(p.domain()));
  }
  const PrimeField field(p.domain().modulus());
  // Per-variable table of successive powers, grown on demand.
  std::unordered_map<std::uint32_t, std::vector<std::uint64_t>> powers;
  auto power = [&](VarId v, std::uint32_t e) {
    auto& table = powers[v.key()];
    if (table.empty()) {
      auto it = point.find(v);
      if (it == point.end()) throw DomainError("point has no value for " + to_string(v));
      table = {1, it->second % field.modulus()};
    }
    if (e >= 64) return field.pow(table[1], e);
    while (table.size() <= e) table.push_back(field.mul(table.back(), table[1]));
    return table[e];
  };

  std::uint64_t acc = 0;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t t = field.reduce(c);
    for (const auto& [v, e] : m.factors()) t = field.mul(t, power(v, e));
    acc = field.add(acc, t);
  }
  return acc;
}

}  // namespace rns
