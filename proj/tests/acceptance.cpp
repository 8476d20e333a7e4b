// Acceptance suite: one line per criterion, each checked at its own time
// limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "literals.hpp"
#include "oracles.hpp"
#include "rns/equations.hpp"
#include "rns/identities.hpp"
#include "rns/variety.hpp"

namespace {

using namespace rns;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail << "failed: ";
      detail << what << "; ";
      passed = false;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  std::function<void(Outcome&)> body;
};

bool equal_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

void bridge_goldens(Outcome& o) {
  o.require(bridge(2, 4).poly == literal::b24(), "B(2,4)");
  o.require(bridge(2, 3).poly == literal::b23(), "B(2,3)");
  o.require(bridge(3, 4).poly == literal::b34(), "B(3,4)");
  o.require(bridge_via_lists(3, 4) == literal::b34(), "B(3,4) via lists");
  for (unsigned a = 1; a <= 6; ++a) {
    const auto row = oracle::pascal_row(a);
    Polynomial expected;
    for (unsigned j = 0; j <= a; ++j) {
      const Monomial m({{VarId::scroll(1, a - j), 1}, {VarId::scroll(2, j), 1}});
      expected += Polynomial::term(mpq_class((j % 2 ? -1 : 1) * row[j]), m);
    }
    o.require(bridge(a, a).poly == expected, "B(" + std::to_string(a) + "," + std::to_string(a) + ")");
  }
  // B(3,4) coefficients read off in alpha order.
  const auto row = oracle::pascal_row(12);
  std::size_t matched = 0;
  for (unsigned alpha = 0; alpha <= 12; ++alpha) {
    const unsigned c = alpha / 4, r = alpha % 4, e = alpha / 3, f = alpha % 3;
    std::vector<Monomial::Factor> fac{{VarId::scroll(1, 3 - c), 4 - r}, {VarId::scroll(2, e), 3 - f}};
    if (r) fac.emplace_back(VarId::scroll(1, 2 - c), r);
    if (f) fac.emplace_back(VarId::scroll(2, e + 1), f);
    if (bridge(3, 4).poly.coefficient(Monomial(fac)) == mpq_class((alpha % 2 ? -1 : 1) * row[alpha])) ++matched;
  }
  o.require(matched == 13, "B(3,4) coefficient sequence");
  o.detail << "B(2,4), B(2,3), B(a,a) a<=6, B(3,4) 13/13 coefficients";
}

void s2234_golden(Outcome& o) {
  const EquationSet eqs = equation_set(build_profile({2, 2, 3, 4}));
  const auto got = eqs.j_polynomials();
  const auto expected = literal::s2234();
  o.require(got.size() == 12, "expected 12 generators, got " + std::to_string(got.size()));
  std::size_t matched = 0;
  for (std::size_t k = 0; k < std::min(got.size(), expected.size()); ++k)
    if (equal_up_to_sign(got[k], expected[k])) ++matched;
  o.require(matched == expected.size(), std::to_string(matched) + "/12 generators match");
  const WeightGroup& g5 = eqs.weight_gens.at(2).group;
  o.require(g5.weight == 5 && g5.degree == 15, "r_5 = 15");
  o.require(g5.pairs.size() == 2 && g5.pairs[0].exponent == 5 && g5.pairs[1].exponent == 3, "exponents (5,3)");
  o.detail << matched << "/12 generators, G[5] exponents (" << g5.pairs.at(0).exponent << ","
           << g5.pairs.at(1).exponent << "), r_5=" << g5.degree;
}

void count_law(Outcome& o) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<unsigned> dd(2, 6), nn(1, 6);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<unsigned> sizes(dd(rng));
    unsigned sum = 0;
    for (auto& n : sizes) sum += n = nn(rng);
    const ScrollProfile s = build_profile(sizes);
    const std::size_t j = equation_set(s).j_size();
    const std::size_t expected = sum + sizes.size() - 3;
    o.require(j == expected && j == s.ambient_dimension() - 2, s.name() + " |J|=" + std::to_string(j));
    ++checked;
  }
  o.detail << checked << " random profiles (d<=6, n_i<=6, seed 20240601): |J| = N-2";
}

void bridge_properties(Outcome& o) {
  int p1 = 0, p2 = 0;
  for (unsigned a = 1; a <= 6; ++a) {
    for (unsigned b = 1; b <= 6; ++b) {
      const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (check_property1(a, b).passed) ++p1; else o.require(false, "property1 " + tag);
      if (check_property2(a, b).passed) ++p2; else o.require(false, "property2 " + tag);
    }
  }
  o.detail << "property1 " << p1 << "/36, property2 " << p2 << "/36 (exact, over Z)";
}

void parametrization(Outcome& o) {
  std::size_t total = 0;
  for (const auto& sizes : std::vector<std::vector<unsigned>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {1, 1, 1}, {2, 2, 3, 4}, {3, 4, 5}}) {
    const ScrollProfile s = build_profile(sizes);
    const ParametrizationReport r = check_parametrization(s);
    o.require(r.passed(), s.name() + " " + std::to_string(r.failures()) + " nonvanishing");
    total += r.checks.size();
  }
  o.detail << total << " generators and minors vanish over 7 profiles";
}

void plucker(Outcome& o) {
  std::size_t quads = 0;
  for (unsigned d = 1; d <= 6; ++d) {
    const PluckerReport r = plucker_identity(d);
    o.require(r.passed(), "d=" + std::to_string(d));
    quads += r.quadruples;
  }
  o.detail << quads << " index quadruples over d<=6";
}

std::string describe(const VarietyReport& r) {
  std::ostringstream s;
  s << "S(";
  for (std::size_t k = 0; k < r.profile.size(); ++k) s << (k ? "," : "") << r.profile[k];
  s << ")/q=" << r.q << ": " << r.count_J << "=" << r.count_P;
  if (!r.witnesses.empty()) {
    s << " witness [";
    for (std::size_t k = 0; k < r.witnesses[0].size(); ++k) s << (k ? " " : "") << r.witnesses[0][k];
    s << "]";
  }
  return s.str();
}

void radical_oracle(Outcome& o) {
  const std::vector<std::pair<std::vector<unsigned>, std::uint64_t>> cases{
      {{1, 1}, 3}, {{1, 1}, 5}, {{1, 1}, 7}, {{1, 2}, 3}, {{1, 2}, 5}, {{1, 2}, 7}, {{2, 2}, 3},
      {{2, 2}, 5}, {{1, 1, 1}, 3}, {{1, 1, 1}, 5}, {{2, 3}, 3}, {{2, 2, 3, 4}, 2}};
  std::size_t passed = 0;
  std::string big;
  for (const auto& [sizes, q] : cases) {
    const VarietyReport r = compare_varieties(build_profile(sizes), q);
    o.require(r.passed(), describe(r));
    if (r.passed()) ++passed;
    if (sizes.size() == 4) big = describe(r) + " over " + std::to_string(r.points_enumerated) + " points";
    if (sizes.size() == 4) o.require(r.points_enumerated <= 32768, "representative count");
  }
  // Independent brute force of the prime ideal's zeros against (q+1)^2.
  for (const auto& sizes : std::vector<std::vector<unsigned>>{{1, 1}, {1, 2}}) {
    const ScrollProfile s = build_profile(sizes);
    for (std::uint64_t q : {3u, 5u, 7u}) {
      const auto zeros = oracle::brute_force_zeros(equation_set(s).prime_polynomials(), s.variables(), q);
      o.require(zeros.size() == (q + 1) * (q + 1), s.name() + " brute force count at q=" + std::to_string(q));
      o.require(compare_varieties(s, q).count_P == zeros.size(), s.name() + " enumerator vs brute force");
    }
  }
  o.detail << passed << "/" << cases.size() << " cases equal, zero witnesses; " << big
           << "; (q+1)^2 confirmed for (1,1),(1,2)";
}

// Terms of J's bridges that vanish after reduction mod q.
std::size_t vanished_terms(const EquationSet& eqs, std::uint64_t q) {
  std::size_t n = 0;
  for (const auto& g : eqs.weight_gens)
    for (const auto& part : g.parts) n += part.bridge.size() - reduce_mod(part.bridge, q).size();
  return n;
}

void small_characteristic(Outcome& o) {
  for (const auto& [sizes, q] : std::vector<std::pair<std::vector<unsigned>, std::uint64_t>>{{{2, 2, 3, 4}, 2}, {{2, 2}, 3}}) {
    const ScrollProfile s = build_profile(sizes);
    const std::size_t dropped = vanished_terms(equation_set(s), q);
    const VarietyReport r = compare_varieties(s, q);
    o.require(r.passed(), describe(r));
    o.detail << describe(r) << " (" << dropped << " bridge terms vanish mod " << q << "); ";
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "bridge goldens", 1, bridge_goldens},
      {"AC2", "S(2,2,3,4) generators", 5, s2234_golden},
      {"AC3", "count law", 10, count_law},
      {"AC4", "bridge properties 1 and 2", 30, bridge_properties},
      {"AC5", "parametrization vanishing", 60, parametrization},
      {"AC6", "Plucker identity", 5, plucker},
      {"AC7", "radical-equality oracle", 120, radical_oracle},
      {"AC8", "characteristic 2/3 robustness", 120, small_characteristic},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) o.require(false, "took " + std::to_string(secs) + " s");
    if (!o.passed) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", secs, c.limit_s);
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << timing
              << "): " << o.detail.str() << '\n';
  }
  std::cout << "[NOTE] AC9 lower bound ara >= N-2 is topological and not checked here; "
               "AC2-AC8 cover the constructive upper bound\n";
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all criteria passed")
            << std::endl;
  return failures ? 1 : 0;
}
