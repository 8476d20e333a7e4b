#include "rns/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rns {

ProjectivePoint scroll_point(const ScrollProfile& profile, const std::vector<std::uint64_t>& u, std::uint64_t s,
                             std::uint64_t t, const PrimeField& field) {
  if (u.size() != profile.d()) throw DomainError("need one u value per block");
  ProjectivePoint pt;
  pt.reserve(profile.variable_count());
  for (unsigned i = 1; i <= profile.d(); ++i) {
    const unsigned n = profile.size(i);
    for (unsigned j = 0; j <= n; ++j) pt.push_back(field.mul(u[i - 1], field.mul(field.pow(s, n - j), field.pow(t, j))));
  }
  return pt;
}

SamplingReport sample_scroll_points(const ScrollProfile& profile, std::uint64_t q, std::uint64_t trials,
                                    std::uint64_t seed) {
  if (trials == 0) throw DomainError("need at least one trial");
  const PrimeField field(q);
  const EquationSet eqs = equation_set(profile);
  const auto gens = compile_j(eqs, q);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(0, q - 1);
  SamplingReport report;
  report.seed = seed;
  report.trials = trials;
  std::vector<std::uint64_t> u(profile.d());
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (auto& x : u) x = draw(rng);
    const std::uint64_t s = draw(rng), t = draw(rng);
    const ProjectivePoint pt = scroll_point(profile, u, s, t, field);
    if (std::all_of(pt.begin(), pt.end(), [](std::uint64_t x) { return x == 0; })) {
      ++report.skipped;
      continue;
    }
    for (const auto& g : gens) {
      if (g.evaluate(pt, field) == 0) continue;
      if (report.failures++ == 0) {
        report.witness = pt;
        report.failing_label = g.label();
      }
      break;
    }
  }
  return report;
}

IdentityTestResult schwartz_zippel_equal(const Polynomial& p, const Polynomial& r, std::uint64_t q,
                                         std::uint64_t trials, std::uint64_t seed, unsigned safety_factor) {
  if (p.domain().kind() == Domain::Kind::PrimeField || r.domain().kind() == Domain::Kind::PrimeField) {
    throw DomainError("identity test expects integer or rational polynomials");
  }
  if (trials == 0) throw DomainError("need at least one trial");
  const PrimeField field(q);
  const Polynomial lhs = p.domain() == r.domain() ? p : to_rationals(p);
  const Polynomial rhs = p.domain() == r.domain() ? r : to_rationals(r);
  const long degree = std::max(lhs.total_degree(), rhs.total_degree());
  if (degree >= 0 && q <= static_cast<std::uint64_t>(degree) * std::max(1u, safety_factor)) {
    throw DomainError("field size " + std::to_string(q) + " too small for degree " + std::to_string(degree));
  }

  std::set<VarId> vars = lhs.variables();
  for (VarId v : rhs.variables()) vars.insert(v);

  // Both sides are evaluated separately so no symbolic difference is formed.
  auto evaluate = [&](const Polynomial& poly, const FieldPoint& pt) {
    std::uint64_t acc = 0;
    for (const auto& [m, c] : poly.terms()) {
      std::uint64_t t = field.reduce(c);
      for (const auto& [v, e] : m.factors()) t = field.mul(t, field.pow(pt.at(v), e));
      acc = field.add(acc, t);
    }
    return acc;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(0, q - 1);
  IdentityTestResult result;
  result.degree = degree;
  result.trials = trials;
  result.seed = seed;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    FieldPoint pt;
    for (VarId v : vars) pt.emplace(v, draw(rng));
    if (evaluate(lhs, pt) != evaluate(rhs, pt)) {
      result.verdict = IdentityVerdict::DefinitelyDifferent;
      result.witness = std::move(pt);
      result.failure_bound = 0;
      return result;
    }
  }
  result.verdict = IdentityVerdict::ProbablyEqual;
  result.failure_bound = degree <= 0 ? 0.0 : std::pow(static_cast<double>(degree) / static_cast<double>(q),
                                                       static_cast<double>(trials));
  return result;
}

}  // namespace rns
