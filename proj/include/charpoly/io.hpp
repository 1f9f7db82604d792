#pragma once

#include <json.hpp>

#include "charpoly/arrangement.hpp"
#include "charpoly/lattice.hpp"
#include "charpoly/report.hpp"

namespace charpoly {

/// Accepts {"ambient_dim": n, "named": "A|B|D|Ank|Dnk|Bnkh", "params": {"k": .., "h": ..}}
/// or {"ambient_dim": n, "subspaces": [[[row]...]...]}. Row entries may be
/// JSON integers or decimal strings. Throws bad_params on malformed input.
Arrangement arrangement_from_json(const nlohmann::json& j);

/// Named arrangement by family label, shared with the CLI flags.
Arrangement named_arrangement(const std::string& named, std::size_t n, std::size_t k, std::size_t h);

nlohmann::json arrangement_to_json(const Arrangement& a);

/// {"coeffs": ["3", "-4", "1"], "degree": 2}; coefficients low degree first,
/// as decimal strings.
nlohmann::json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const nlohmann::json& j);

/// {"ambient_dim", "elements": [{"index", "rows", "dim", "mobius"}], "covers": [[i, j]...]}
nlohmann::json poset_to_json(const IntersectionPoset& p);

/// {"ok": bool, "checks": [{"instance", "lhs", "rhs", "ok"}]}
nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace charpoly
