#pragma once

#include <string>

#include <json.hpp>

#include "hprop/graphon.hpp"
#include "hprop/graphon_ext.hpp"
#include "hprop/montecarlo.hpp"
#include "hprop/polytope.hpp"

namespace hprop {

// Graphon file schema:
//   {"type":"step","sigma":[...],"values":[[...]]}
//   {"type":"grid","resolution":N,"values":[[...]]}
//   {"type":"family","name":"constant"|"product"|"mean","params":{"p":...}}
// Step sigma/values entries may be decimal strings (kept exact) or numbers
// (interpreted through their shortest round-trip decimal form).
GeneralGraphon graphon_from_json(const nlohmann::json& j);
GeneralGraphon load_graphon_file(const std::string& path);

nlohmann::json membership_to_json(const MembershipVerdict& v);
MembershipVerdict membership_from_json(const nlohmann::json& j);

nlohmann::json theorem_verdict_to_json(const TheoremVerdict& v);
TheoremVerdict theorem_verdict_from_json(const nlohmann::json& j);

nlohmann::json ext_verdict_to_json(const ExtVerdict& v);

}  // namespace hprop
