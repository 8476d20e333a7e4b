#include "rns/poly_json.hpp"

#include <string>

namespace rns {

using nlohmann::ordered_json;

ordered_json domain_to_json(const Domain& d) {
  switch (d.kind()) {
    case Domain::Kind::Integer:
      return "Z";
    case Domain::Kind::Rational:
      return "Q";
    case Domain::Kind::PrimeField:
      return ordered_json{{"Fp", d.modulus()}};
  }
  return nullptr;
}

Domain domain_from_json(const ordered_json& j) {
  if (j.is_string()) {
    if (j == "Z") return Domain::integers();
    if (j == "Q") return Domain::rationals();
  } else if (j.is_object() && j.contains("Fp")) {
    return Domain::prime_field(j.at("Fp").get<std::uint64_t>());
  }
  throw DomainError("unrecognized domain: " + j.dump());
}

ordered_json to_json(const Polynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json exps = ordered_json::array();
    for (const auto& [v, e] : m.factors()) {
      if (v.is_scroll()) {
        exps.push_back({v.block(), v.slot(), e});
      } else {
        exps.push_back({std::string(1, aux_letter(v.aux_name())), v.aux_index(), e});
      }
    }
    terms.push_back({{"coeff", c.get_str()}, {"exps", std::move(exps)}});
  }
  return {{"domain", domain_to_json(p.domain())}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const ordered_json& j) {
  const Domain domain = domain_from_json(j.at("domain"));
  std::vector<std::pair<mpq_class, Monomial>> terms;
  for (const auto& t : j.at("terms")) {
    std::vector<Monomial::Factor> factors;
    for (const auto& f : t.at("exps")) {
      if (!f.is_array() || f.size() != 3) throw DomainError("malformed exponent entry: " + f.dump());
      const auto e = f[2].get<std::uint32_t>();
      if (f[0].is_string()) {
        const auto name = f[0].get<std::string>();
        constexpr std::string_view letters = "stuvzw";
        const auto pos = name.size() == 1 ? letters.find(name[0]) : std::string_view::npos;
        if (pos == std::string_view::npos) throw DomainError("unknown auxiliary variable: " + name);
        factors.emplace_back(VarId::aux(static_cast<AuxName>(pos), f[1].get<unsigned>()), e);
      } else {
        factors.emplace_back(VarId::scroll(f[0].get<unsigned>(), f[1].get<unsigned>()), e);
      }
    }
    mpq_class c;
    if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) {
      throw DomainError("malformed coefficient: " + t.at("coeff").dump());
    }
    c.canonicalize();
    terms.emplace_back(std::move(c), Monomial(std::move(factors)));
  }
  return Polynomial::from_terms(terms, domain);
}

}  // namespace rns
