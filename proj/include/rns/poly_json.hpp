#pragma once

#include <json.hpp>

#include "rns/polynomial.hpp"

namespace rns {

/// {"domain":"Z"|"Q"|{"Fp":p},"terms":[{"coeff":"<decimal>","exps":[[i,j,e],...]},...]}
///
/// Terms appear in canonical (descending grevlex) order and exps in VarId
/// order. Auxiliary variables are written as [name, index, e], e.g. ["u",1,2].
nlohmann::ordered_json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json domain_to_json(const Domain& d);
Domain domain_from_json(const nlohmann::ordered_json& j);

}  // namespace rns
