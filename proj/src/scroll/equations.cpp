#include "rns/equations.hpp"

#include <iostream>

namespace rns {

namespace {

std::string pair_label(const WeightedPair& pair) {
  std::string out = "B(" + std::to_string(pair.meta.a) + "," + std::to_string(pair.meta.b) + ")[" +
                    std::to_string(pair.i) + "," + std::to_string(pair.j) + "]";
  if (pair.exponent != 1) out += "^" + std::to_string(pair.exponent);
  return out;
}

}  // namespace

Polynomial WeightGenerator::expand() const {
  Polynomial sum;
  for (const auto& part : parts) sum += part.bridge.pow(part.pair.exponent);
  return sum;
}

WeightGenerator weight_generator(const ScrollProfile& profile, const WeightGroup& group) {
  WeightGenerator gen{group, {}, "G[" + std::to_string(group.weight) + "] ="};
  for (std::size_t idx = 0; idx < group.pairs.size(); ++idx) {
    const auto& pair = group.pairs[idx];
    gen.parts.push_back({pair, bridge(profile.size(pair.i), profile.size(pair.j), pair.i, pair.j).poly});
    gen.label += (idx ? " + " : " ") + pair_label(pair);
  }
  return gen;
}

Polynomial g_polynomial(const ScrollProfile& profile, const WeightGroup& group, const ConstructionOptions& options) {
  if (group.degree > options.blowup_threshold) {
    const std::string msg = "G[" + std::to_string(group.weight) + "] of " + profile.name() + " has degree " +
                            std::to_string(group.degree) + " (threshold " + std::to_string(options.blowup_threshold) +
                            "); expansion may be very large";
    if (options.warn) {
      options.warn(msg);
    } else {
      std::cerr << "warning: " << msg << '\n';
    }
  }
  return weight_generator(profile, group).expand();
}

EquationSet equation_set(const ScrollProfile& profile, bool dedup_minors) {
  EquationSet eqs{profile, {}, {}, {}};
  for (unsigned i = 1; i <= profile.d(); ++i) {
    for (unsigned j = 1; j < profile.size(i); ++j) {
      eqs.curve_gens.push_back(
          {i, j, curve_equation(profile.size(i), j, i), "F[" + std::to_string(i) + "," + std::to_string(j) + "]"});
    }
  }
  for (const auto& group : weight_groups(profile)) eqs.weight_gens.push_back(weight_generator(profile, group));
  for (auto& minor : minors_2x2(catalecticant(profile), dedup_minors)) {
    std::string label = "M[" + std::to_string(minor.left) + "," + std::to_string(minor.right) + "]";
    eqs.prime_gens.push_back({std::move(minor), std::move(label)});
  }
  return eqs;
}

std::vector<Polynomial> EquationSet::j_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(j_size());
  for (const auto& g : curve_gens) out.push_back(g.poly);
  for (const auto& g : weight_gens) out.push_back(g.expand());
  return out;
}

std::vector<std::string> EquationSet::j_labels() const {
  std::vector<std::string> out;
  for (const auto& g : curve_gens) out.push_back(g.label);
  for (const auto& g : weight_gens) out.push_back(g.label);
  return out;
}

std::vector<Polynomial> EquationSet::prime_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(prime_gens.size());
  for (const auto& g : prime_gens) out.push_back(g.minor.poly);
  return out;
}

std::size_t expected_j_size(const ScrollProfile& profile) {
  const std::size_t d = profile.d();
  return profile.sum_sizes() - d + (d >= 2 ? 2 * d - 3 : 0);
}

}  // namespace rns
