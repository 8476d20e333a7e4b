#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "rns/equations.hpp"

namespace rns {

enum class CasDialect { Macaulay2, Singular };

/// Summary line: d, N, |J| and the arithmetic rank claim.
std::string summary_line(const EquationSet& eqs);

/// One generator per line, each preceded by a "# label" comment.
void write_plain(const EquationSet& eqs, std::ostream& out, bool include_minors = false);

nlohmann::ordered_json to_json(const EquationSet& eqs);

/// Deterministic script declaring the ring, J, the prime ideal, and a
/// radical-equality query.
void write_cas_script(const EquationSet& eqs, CasDialect dialect, std::ostream& out);

/// "m2", "macaulay2", "cas" -> Macaulay2; "singular" -> Singular. Throws DomainError otherwise.
CasDialect parse_dialect(const std::string& name);

}  // namespace rns
