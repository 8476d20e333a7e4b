#include "rns/identities.hpp"

namespace rns {

namespace {

Polynomial aux(AuxName name, unsigned index = 0) { return Polynomial::variable(VarId::aux(name, index)); }

Polynomial aux_monomial(std::initializer_list<Monomial::Factor> factors) { return Polynomial::term(1, Monomial(factors)); }

IdentityCheck identity(Polynomial residual) {
  const bool ok = residual.is_zero();
  return {ok, std::move(residual)};
}

}  // namespace

ParamMap scroll_parametrization(const ScrollProfile& profile) {
  ParamMap map{profile, {}};
  const VarId s = VarId::aux(AuxName::s), t = VarId::aux(AuxName::t);
  for (unsigned i = 1; i <= profile.d(); ++i) {
    const unsigned n = profile.size(i);
    for (unsigned j = 0; j <= n; ++j) {
      map.images.emplace(VarId::scroll(i, j), aux_monomial({{VarId::aux(AuxName::u, i), 1}, {s, n - j}, {t, j}}));
    }
  }
  return map;
}

IdentityCheck check_property1(unsigned a, unsigned b) {
  const VarId s = VarId::aux(AuxName::s), t = VarId::aux(AuxName::t);
  const VarId u = VarId::aux(AuxName::u), v = VarId::aux(AuxName::v);
  Substitution sigma;
  for (unsigned j = 0; j <= a; ++j) sigma.emplace(VarId::scroll(1, j), aux_monomial({{u, 1}, {s, a - j}, {t, j}}));
  for (unsigned h = 0; h <= b; ++h) sigma.emplace(VarId::scroll(2, h), aux_monomial({{v, 1}, {s, b - h}, {t, h}}));
  return identity(substitute(bridge(a, b).poly, sigma, SubstitutionMode::Strict));
}

IdentityCheck check_property2(unsigned a, unsigned b) {
  const VarId s = VarId::aux(AuxName::s), t = VarId::aux(AuxName::t);
  const VarId z = VarId::aux(AuxName::z), w = VarId::aux(AuxName::w);
  Substitution sigma;
  for (unsigned j = 0; j <= a; ++j) sigma.emplace(VarId::scroll(1, j), aux_monomial({{s, a - j}, {t, j}}));
  for (unsigned h = 0; h <= b; ++h) sigma.emplace(VarId::scroll(2, h), aux_monomial({{z, b - h}, {w, h}}));
  const Bridge br = bridge(a, b);
  const Polynomial target = (aux(AuxName::t) * aux(AuxName::z) - aux(AuxName::s) * aux(AuxName::w)).pow(br.meta.m);
  return identity(substitute(br.poly, sigma, SubstitutionMode::Strict) - target);
}

bool ParametrizationReport::passed() const noexcept { return failures() == 0; }

std::size_t ParametrizationReport::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 0 : 1;
  return n;
}

ParametrizationReport check_parametrization(const ScrollProfile& profile, std::uint64_t expand_threshold) {
  const ParamMap param = scroll_parametrization(profile);
  const EquationSet eqs = equation_set(profile);
  auto image = [&](const Polynomial& p) { return substitute(p, param.images, SubstitutionMode::Strict); };

  ParametrizationReport report;
  auto record = [&](const std::string& label, Polynomial residual) {
    const bool ok = residual.is_zero();
    report.checks.push_back({label, ok, std::move(residual)});
  };
  for (const auto& g : eqs.curve_gens) record(g.label, image(g.poly));
  for (const auto& g : eqs.weight_gens) {
    if (g.degree() <= expand_threshold) {
      record(g.label, image(g.expand()));
    } else {
      Polynomial sum;
      for (const auto& part : g.parts) sum += image(part.bridge).pow(part.pair.exponent);
      record(g.label, std::move(sum));
    }
  }
  for (const auto& g : eqs.prime_gens) record(g.label, image(g.minor.poly));
  return report;
}

Polynomial minor_symbol(unsigned i, unsigned j) {
  return aux(AuxName::t, i) * aux(AuxName::u, j) - aux(AuxName::u, i) * aux(AuxName::t, j);
}

PluckerReport plucker_identity(unsigned d) {
  PluckerReport report;
  for (unsigned a = 1; a <= d; ++a) {
    for (unsigned i = a + 1; i <= d; ++i) {
      for (unsigned j = i + 1; j <= d; ++j) {
        for (unsigned b = j + 1; b <= d; ++b) {
          ++report.quadruples;
          const Polynomial rel = minor_symbol(i, j) * minor_symbol(a, b) - minor_symbol(a, j) * minor_symbol(i, b) +
                                 minor_symbol(a, i) * minor_symbol(j, b);
          if (!rel.is_zero()) report.failures.push_back({a, i, j, b});
        }
      }
    }
  }
  return report;
}

}  // namespace rns
