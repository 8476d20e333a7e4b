#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "literals.hpp"
#include "oracles.hpp"
#include "rns/field_eval.hpp"
#include "rns/identities.hpp"
#include "rns/sampling.hpp"
#include "rns/text.hpp"
#include "rns/variety.hpp"

namespace rns {
namespace {

Polynomial aux(AuxName n, unsigned i = 0) { return Polynomial::variable(VarId::aux(n, i)); }

std::vector<Polynomial> reduced(const std::vector<Polynomial>& gens, std::uint64_t q) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(reduce_mod(g, q));
  return out;
}

EnumerationOptions single_thread() {
  EnumerationOptions o;
  o.threads = 1;
  return o;
}

TEST(Property1, ListedPairs) {
  for (auto [a, b] : {std::pair{2u, 4u}, {1u, 1u}, {3u, 4u}}) {
    const IdentityCheck c = check_property1(a, b);
    EXPECT_TRUE(c.passed) << a << "," << b;
    EXPECT_TRUE(c.residual.is_zero());
  }
}

TEST(Property2, ListedPairs) {
  const Polynomial base = aux(AuxName::t) * aux(AuxName::z) - aux(AuxName::s) * aux(AuxName::w);
  EXPECT_TRUE(check_property2(1, 1).passed);
  EXPECT_TRUE(check_property2(2, 4).passed);
  EXPECT_TRUE(check_property2(2, 3).passed);
  // Independent restatement for (2,3): substitute by hand.
  Substitution sigma;
  for (unsigned j = 0; j <= 2; ++j) sigma.emplace(VarId::scroll(1, j), aux(AuxName::s).pow(2 - j) * aux(AuxName::t).pow(j));
  for (unsigned h = 0; h <= 3; ++h) sigma.emplace(VarId::scroll(2, h), aux(AuxName::z).pow(3 - h) * aux(AuxName::w).pow(h));
  EXPECT_EQ(substitute(literal::b23(), sigma, SubstitutionMode::Strict), base.pow(6));
}

TEST(Properties, ExhaustiveGrid) {
  for (unsigned a = 1; a <= 6; ++a) {
    for (unsigned b = 1; b <= 6; ++b) {
      EXPECT_TRUE(check_property1(a, b).passed) << a << "," << b;
      EXPECT_TRUE(check_property2(a, b).passed) << a << "," << b;
    }
  }
}

TEST(Parametrization, SegreMinor) {
  const ParamMap pm = scroll_parametrization(build_profile({1, 1}));
  const Polynomial img = substitute(parse_polynomial("x[1][0]*x[2][1] - x[1][1]*x[2][0]"), pm.images);
  EXPECT_TRUE(img.is_zero());
  EXPECT_EQ(pm.images.at(VarId::scroll(1, 0)), aux(AuxName::u, 1) * aux(AuxName::s));
  EXPECT_EQ(pm.images.at(VarId::scroll(2, 1)), aux(AuxName::u, 2) * aux(AuxName::t));
}

TEST(Parametrization, ProfileMatrix) {
  for (const auto& sizes : std::vector<std::vector<unsigned>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {1, 1, 1}, {2, 2, 3, 4}, {3, 4, 5}}) {
    const ScrollProfile s = build_profile(sizes);
    const ParametrizationReport r = check_parametrization(s);
    EXPECT_TRUE(r.passed()) << s.name();
    EXPECT_EQ(r.checks.size(), s.ambient_dimension() - 2 + s.sum_sizes() * (s.sum_sizes() - 1) / 2) << s.name();
  }
}

TEST(Parametrization, DetectsANonMember) {
  // A linear form never vanishes on the scroll; the checker must see that.
  const ParamMap pm = scroll_parametrization(build_profile({2, 2}));
  EXPECT_FALSE(substitute(parse_polynomial("x[1][0] - x[2][0]"), pm.images).is_zero());
}

TEST(Plucker, QuadrupleCounts) {
  EXPECT_EQ(plucker_identity(3).quadruples, 0u);
  EXPECT_TRUE(plucker_identity(3).passed());
  EXPECT_EQ(plucker_identity(4).quadruples, 1u);
  EXPECT_EQ(plucker_identity(5).quadruples, 5u);
  for (unsigned d = 1; d <= 6; ++d) EXPECT_TRUE(plucker_identity(d).passed()) << d;
  EXPECT_EQ(plucker_identity(6).quadruples, 15u);
}

TEST(Plucker, DisplayedRelation) {
  const Polynomial rel = minor_symbol(2, 3) * minor_symbol(1, 4) - minor_symbol(1, 3) * minor_symbol(2, 4) +
                         minor_symbol(1, 2) * minor_symbol(3, 4);
  EXPECT_TRUE(rel.is_zero());
  EXPECT_EQ(minor_symbol(1, 2), parse_polynomial("t[1]*u[2] - u[1]*t[2]"));
}

TEST(Enumerate, SegreQuadricOverF3) {
  const ScrollProfile s = build_profile({1, 1});
  const std::vector<Polynomial> gens = reduced({parse_polynomial("x[1][0]*x[2][1] - x[1][1]*x[2][0]")}, 3);
  const EnumerationResult r = enumerate_variety(gens, s.variables(), single_thread());
  EXPECT_EQ(r.points.size(), 16u);
  EXPECT_EQ(r.visited, 40u);
}

TEST(Enumerate, P1BundleOverF3) {
  const ScrollProfile s = build_profile({1, 2});
  const EnumerationResult r = enumerate_variety(reduced(equation_set(s).j_polynomials(), 3), s.variables());
  EXPECT_EQ(r.points.size(), 16u);
}

TEST(Enumerate, EmptySystemGivesEveryPoint) {
  for (std::uint64_t q : {2u, 3u, 5u}) {
    const EnumerationResult all = enumerate_variety(std::vector<CompiledGenerator>{}, 5, q);
    EXPECT_EQ(all.points.size(), projective_point_count(q, 5));
    EXPECT_EQ(all.visited, (q * q * q * q * q - 1) / (q - 1));
    for (const auto& p : all.points) {
      std::size_t lead = 0;
      while (p[lead] == 0) ++lead;
      EXPECT_EQ(p[lead], 1u);
    }
  }
}

TEST(Enumerate, MatchesBruteForceOracle) {
  for (auto [sizes, q] : std::vector<std::pair<std::vector<unsigned>, std::uint64_t>>{
           {{1, 1}, 5}, {{1, 2}, 3}, {{2, 2}, 3}, {{1, 1, 1}, 3}, {{2, 1}, 5}}) {
    const ScrollProfile s = build_profile(sizes);
    const EquationSet eqs = equation_set(s);
    const auto expected_j = oracle::brute_force_zeros(eqs.j_polynomials(), s.variables(), q);
    const auto expected_p = oracle::brute_force_zeros(eqs.prime_polynomials(), s.variables(), q);
    const auto got_j = enumerate_variety(reduced(eqs.j_polynomials(), q), s.variables()).points;
    const auto got_p = enumerate_variety(reduced(eqs.prime_polynomials(), q), s.variables()).points;
    EXPECT_EQ(std::set<ProjectivePoint>(got_j.begin(), got_j.end()), expected_j) << s.name() << " q=" << q;
    EXPECT_EQ(std::set<ProjectivePoint>(got_p.begin(), got_p.end()), expected_p) << s.name() << " q=" << q;
    EXPECT_EQ(expected_p.size(), oracle::scroll_point_count(q, s.d()));
  }
}

TEST(Enumerate, TruncatedSystemHasExtraPoints) {
  // Without its bridge, J for (1,2) is a cone over a conic times a line.
  const ScrollProfile s = build_profile({1, 2});
  const auto j = equation_set(s).j_polynomials();
  const std::vector<Polynomial> curve_only{reduce_mod(j.front(), 3)};
  const auto loose = enumerate_variety(curve_only, s.variables()).points;
  EXPECT_EQ(loose.size(), oracle::brute_force_zeros({j.front()}, s.variables(), 3).size());
  EXPECT_GT(loose.size(), 16u);
}

TEST(Parametrization, FlippedSignBreaksVanishing) {
  const ScrollProfile s = build_profile({2, 3});
  Polynomial broken = bridge(2, 3).poly;
  const auto& [lead, c] = *broken.terms().begin();
  broken = broken - Polynomial::term(2 * c, lead);
  EXPECT_FALSE(substitute(broken, scroll_parametrization(s).images).is_zero());
}

TEST(Enumerate, ThreadCountDoesNotChangeResult) {
  const ScrollProfile s = build_profile({2, 3});
  const auto gens = compile_j(equation_set(s), 3);
  EnumerationOptions one = single_thread();
  EnumerationOptions many;
  many.threads = 4;
  many.chunk_size = 37;
  const auto a = enumerate_variety(gens, s.variable_count(), 3, one);
  const auto b = enumerate_variety(gens, s.variable_count(), 3, many);
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.visited, b.visited);
}

TEST(Enumerate, BudgetAndFieldLimits) {
  const ScrollProfile s = build_profile({2, 2, 3, 4});
  EnumerationOptions tight;
  tight.budget = 1000;
  EXPECT_THROW(compare_varieties(s, 2, tight), BudgetExceeded);
  try {
    compare_varieties(s, 3, tight);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 1000u);
    EXPECT_GT(e.estimate(), 1000u);
  }
  EXPECT_THROW(compare_varieties(build_profile({1, 1}), 4), DomainError);
  EnumerationOptions small_field;
  small_field.max_field = 5;
  EXPECT_THROW(compare_varieties(build_profile({1, 1}), 7, small_field), DomainError);
  EXPECT_THROW(projective_point_count(2, 80), BudgetExceeded);
}

TEST(CompiledGenerators, LazyAndExpandedAgree) {
  const ScrollProfile s = build_profile({2, 2, 3});
  const EquationSet eqs = equation_set(s);
  for (std::uint64_t q : {2u, 3u, 7u}) {
    const auto lazy = compile_j(eqs, q);
    const auto full = compile_j_expanded(eqs, q);
    ASSERT_EQ(lazy.size(), full.size());
    const PrimeField f(q);
    std::mt19937_64 rng(q);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::uint64_t> pt(s.variable_count());
      for (auto& x : pt) x = rng() % q;
      for (std::size_t k = 0; k < lazy.size(); ++k) EXPECT_EQ(lazy[k].evaluate(pt, f), full[k].evaluate(pt, f));
    }
  }
}

TEST(CompareVarieties, SmallProfiles) {
  for (auto [sizes, q] : std::vector<std::pair<std::vector<unsigned>, std::uint64_t>>{
           {{1, 1}, 3}, {{1, 1}, 5}, {{1, 1}, 7}, {{1, 2}, 3}, {{1, 2}, 5}, {{1, 2}, 7},
           {{2, 2}, 3}, {{2, 2}, 5}, {{1, 1, 1}, 3}, {{1, 1, 1}, 5}, {{2, 3}, 3}}) {
    const ScrollProfile s = build_profile(sizes);
    const VarietyReport r = compare_varieties(s, q);
    EXPECT_TRUE(r.passed()) << s.name() << " q=" << q;
    EXPECT_EQ(r.count_P, oracle::scroll_point_count(q, s.d())) << s.name() << " q=" << q;
    EXPECT_LE(r.count_P, r.count_J);
    EXPECT_EQ(r.points_enumerated, projective_point_count(q, s.variable_count()));
  }
}

TEST(CompareVarieties, ReportJson) {
  EnumerationOptions o;
  o.seed = 42;
  const VarietyReport r = compare_varieties(build_profile({1, 2}), 3, o);
  const auto j = r.to_json();
  EXPECT_EQ(j["profile"], nlohmann::ordered_json::array({1, 2}));
  EXPECT_EQ(j["q"], 3);
  EXPECT_EQ(j["count_J"], 16);
  EXPECT_EQ(j["count_P"], 16);
  EXPECT_TRUE(j["witnesses"].empty());
  EXPECT_EQ(j["seed"], 42);
  EXPECT_TRUE(j.contains("elapsed_ms"));
  EXPECT_EQ(compare_varieties(build_profile({1, 2}), 3).count_J, r.count_J);
}

TEST(Sampling, ScrollPoint) {
  const ScrollProfile s = build_profile({1, 1});
  const PrimeField f(5);
  const ProjectivePoint pt = scroll_point(s, {1, 1}, 1, 0, f);
  EXPECT_EQ(pt, (ProjectivePoint{1, 0, 1, 0}));
  const Polynomial b11 = reduce_mod(bridge(1, 1).poly, 5);
  FieldPoint fp;
  for (std::size_t k = 0; k < pt.size(); ++k) fp.emplace(s.variables()[k], pt[k]);
  EXPECT_EQ(eval_point(b11, fp), 0u);
  EXPECT_EQ(scroll_point(build_profile({2, 3}), {3, 4}, 0, 0, f), ProjectivePoint(7, 0));
}

TEST(Sampling, RandomScrollPoints) {
  const SamplingReport r = sample_scroll_points(build_profile({2, 2, 3, 4}), 101, 1000, 5);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.trials, 1000u);
  EXPECT_EQ(r.seed, 5u);
  const SamplingReport tiny = sample_scroll_points(build_profile({1, 1}), 2, 400, 1);
  EXPECT_TRUE(tiny.passed());
  EXPECT_GT(tiny.skipped, 0u);
}

TEST(SchwartzZippel, EqualInputs) {
  const Polynomial p = parse_polynomial("3*x[1][0]^4*x[2][1] - s^5 + 1");
  const auto r = schwartz_zippel_equal(p, p, 101, 20, 3);
  EXPECT_EQ(r.verdict, IdentityVerdict::ProbablyEqual);
  EXPECT_EQ(schwartz_zippel_equal(bridge(2, 4).poly, bridge_via_lists(2, 4), 1009, 10, 1).verdict,
            IdentityVerdict::ProbablyEqual);
  const auto g = schwartz_zippel_equal(literal::b24(1, 4).pow(5), bridge(2, 4, 1, 4).poly.pow(5), 65537, 5, 9);
  EXPECT_EQ(g.verdict, IdentityVerdict::ProbablyEqual);
}

TEST(SchwartzZippel, DifferentInputsGiveWitness) {
  const Polynomial x0 = parse_polynomial("x[1][0]"), x1 = parse_polynomial("x[1][1]");
  const auto r = schwartz_zippel_equal(x0, x1, 101, 10, 7);
  ASSERT_EQ(r.verdict, IdentityVerdict::DefinitelyDifferent);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->at(VarId::scroll(1, 0)), r.witness->at(VarId::scroll(1, 1)));
}

TEST(SchwartzZippel, BoundAndRefusal) {
  const Polynomial p = parse_polynomial("x[1][0]^10 - x[1][1]^10");
  const auto r = schwartz_zippel_equal(p, p, 101, 3, 0);
  EXPECT_EQ(r.degree, 10);
  EXPECT_DOUBLE_EQ(r.failure_bound, std::pow(10.0 / 101.0, 3));
  const auto s = schwartz_zippel_equal(p, Polynomial(), 101, 3, 0);
  EXPECT_EQ(s.degree, 10);
  EXPECT_THROW(schwartz_zippel_equal(p, Polynomial(), 19, 3, 0), DomainError);
  EXPECT_THROW(schwartz_zippel_equal(p, Polynomial(), 100, 3, 0), DomainError);
  EXPECT_THROW(schwartz_zippel_equal(reduce_mod(p, 5), reduce_mod(p, 5), 101, 3, 0), DomainError);
}

}  // namespace
}  // namespace rns
