#include "rns/field_eval.hpp"

#include <unordered_map>

namespace rns {

CompiledPolynomial::CompiledPolynomial(const Polynomial& p, std::span<const VarId> coords) {
  if (p.domain().kind() != Domain::Kind::PrimeField) {
    throw DomainError("compiled evaluation needs an F_q polynomial, got " + to_string(p.domain()));
  }
  std::unordered_map<std::uint32_t, std::uint32_t> index;
  for (std::size_t k = 0; k < coords.size(); ++k) index.emplace(coords[k].key(), static_cast<std::uint32_t>(k));
  offsets_.push_back(0);
  for (const auto& [m, c] : p.terms()) {
    coeffs_.push_back(c.get_num().get_ui());
    for (const auto& [v, e] : m.factors()) {
      auto it = index.find(v.key());
      if (it == index.end()) throw DomainError("variable " + to_string(v) + " is not a coordinate");
      factors_.emplace_back(it->second, e);
    }
    offsets_.push_back(static_cast<std::uint32_t>(factors_.size()));
  }
}

std::uint64_t CompiledPolynomial::evaluate(std::span<const std::uint64_t> point, const PrimeField& field) const {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::uint64_t t = coeffs_[k];
    for (std::uint32_t f = offsets_[k]; f < offsets_[k + 1] && t != 0; ++f) {
      const auto [var, exp] = factors_[f];
      const std::uint64_t x = point[var];
      t = field.mul(t, exp == 1 ? x : field.pow(x, exp));
    }
    acc = field.add(acc, t);
  }
  return acc;
}

CompiledGenerator::CompiledGenerator(std::string label, std::vector<std::pair<CompiledPolynomial, std::uint64_t>> parts)
    : label_(std::move(label)), parts_(std::move(parts)) {}

std::uint64_t CompiledGenerator::evaluate(std::span<const std::uint64_t> point, const PrimeField& field) const {
  std::uint64_t acc = 0;
  for (const auto& [poly, exp] : parts_) {
    const std::uint64_t value = poly.evaluate(point, field);
    acc = field.add(acc, exp == 1 ? value : field.pow(value, exp));
  }
  return acc;
}

namespace {

CompiledGenerator single(const std::string& label, const Polynomial& p, std::uint64_t q, std::span<const VarId> coords) {
  std::vector<std::pair<CompiledPolynomial, std::uint64_t>> parts;
  parts.emplace_back(CompiledPolynomial(reduce_mod(p, q), coords), 1);
  return CompiledGenerator(label, std::move(parts));
}

}  // namespace

std::vector<CompiledGenerator> compile_j(const EquationSet& eqs, std::uint64_t q) {
  const auto& coords = eqs.profile.variables();
  std::vector<CompiledGenerator> out;
  for (const auto& g : eqs.curve_gens) out.push_back(single(g.label, g.poly, q, coords));
  for (const auto& g : eqs.weight_gens) {
    std::vector<std::pair<CompiledPolynomial, std::uint64_t>> parts;
    for (const auto& part : g.parts) {
      parts.emplace_back(CompiledPolynomial(reduce_mod(part.bridge, q), coords), part.pair.exponent);
    }
    out.emplace_back(g.label, std::move(parts));
  }
  return out;
}

std::vector<CompiledGenerator> compile_j_expanded(const EquationSet& eqs, std::uint64_t q) {
  const auto& coords = eqs.profile.variables();
  std::vector<CompiledGenerator> out;
  for (const auto& g : eqs.curve_gens) out.push_back(single(g.label, g.poly, q, coords));
  for (const auto& g : eqs.weight_gens) out.push_back(single(g.label, g.expand(), q, coords));
  return out;
}

std::vector<CompiledGenerator> compile_prime(const EquationSet& eqs, std::uint64_t q) {
  const auto& coords = eqs.profile.variables();
  std::vector<CompiledGenerator> out;
  for (const auto& g : eqs.prime_gens) out.push_back(single(g.label, g.minor.poly, q, coords));
  return out;
}

}  // namespace rns
