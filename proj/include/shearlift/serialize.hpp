#pragma once

#include <json.hpp>

#include "shearlift/shear.hpp"

namespace shearlift {

/// Stable JSON form of a spec: {"family": {"kind": "fc"|"fn", ...},
/// "dilatation": {"kind": "mobius"|"power", ...}}.
nlohmann::ordered_json spec_to_json(const ShearSpec& spec);
ShearSpec spec_from_json(const nlohmann::json& j);

}  // namespace shearlift
