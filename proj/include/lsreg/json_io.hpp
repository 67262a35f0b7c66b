#pragma once

#include <string>

#include "json.hpp"
#include "lsreg/state.hpp"

namespace lsreg {

// JSON encodings used by the CLI. Field order is fixed so runs diff cleanly:
//   cartesian: {"q": [q1,q2,q3], "p": [p1,p2,p3]}
//   sphere:    {"xi": [4], "eta": [4], "sign": "neg"|"pos"}

nlohmann::ordered_json to_json(const CartesianState& st);
nlohmann::ordered_json to_json(const SphereState& sp);

CartesianState cartesian_from_json(const nlohmann::json& j);
SphereState sphere_from_json(const nlohmann::json& j);

// True when the object encodes a sphere-side state (has an "xi" field).
bool is_sphere_json(const nlohmann::json& j);

// %.17g, enough digits to reproduce the double exactly.
std::string fmt17(double v);

}  // namespace lsreg
