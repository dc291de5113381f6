#pragma once

#include <json.hpp>

#include "proofcount/poly.hpp"
#include "proofcount/term.hpp"

namespace pc {

// PSE interchange format: variables in order, one monomial list per
// variable, each monomial {"coefficient": n | "omega", "exponents": {var: k}}.
nlohmann::ordered_json pse_to_json(const PSE& s);
PSE pse_from_json(const nlohmann::json& j);  // throws std::invalid_argument

nlohmann::ordered_json extnat_to_json(ExtNat v);  // number, or "omega"
ExtNat extnat_from_json(const nlohmann::json& j);

nlohmann::ordered_json goal_to_json(const Goal& g);

}  // namespace pc
