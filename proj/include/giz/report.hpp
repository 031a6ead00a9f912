#pragma once

#include <json.hpp>
#include <string>

#include "giz/extdiv.hpp"

namespace giz {

// Keys: weights, outer, types, r, exceptional, dual_exceptional, minus_one,
// symmetric, symmetric_literal, config, invariant_sets, verdict, witness,
// big_orbit_feathers, criterion, star, fibration_classes, fv, hugeness.
// Parts whose hypotheses fail are null.
nlohmann::json analyze_json(const ExtendedDivisor& e);
nlohmann::json orbits_json(const ExtendedDivisor& e);
nlohmann::json autgraph_json(const ExtendedDivisor& e);
nlohmann::json divisor_json(const ExtendedDivisor& e);

std::string analyze_text(const ExtendedDivisor& e);
std::string orbits_text(const ExtendedDivisor& e);
std::string autgraph_text(const ExtendedDivisor& e);

std::string dext_dot(const ExtendedDivisor& e);
std::string fv_dot(const ExtendedDivisor& e);

std::string label_str(int i, int j);

}  // namespace giz
