#pragma once

#include <json.hpp>

#include "sms3/cg.hpp"
#include "sms3/core.hpp"
#include "sms3/group.hpp"
#include "sms3/poset.hpp"
#include "sms3/types.hpp"

namespace sms3 {

using nlohmann::json;

// Integers that fit a machine word encode as JSON numbers; larger values fall
// back to decimal strings.  Readers accept both.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

json square_to_json(const SemiMagicSquare& m);         // {"matrix": [[..]x3]}
SemiMagicSquare square_from_json(const json& j);

json sextuple_to_json(const Vec6& a);                  // {"a": [a1..a6]}
Vec6 sextuple_from_json(const json& j);                // normalized (upshifted)

json decomposition_to_json(const ReducedDecomposition& d);  // {"m0",..,"reduced"}

json element_to_json(const GroupElement& g);  // {"row","col","transpose","slots"}
GroupElement element_from_json(const json& j);

json orbit_to_json(const OrbitReport& r);  // {"rep","size","stab_order","class"}

json cg_to_json(const CGIndex& idx);
CGIndex cg_from_json(const json& j);

json identity_to_json(const ReggeIdentity& id);

json convolution_to_json(const ConvolutionReport& r);

json poset_to_json(const GradedPoset& p);  // {"s","levels","v"}

// Detects one of the payload schemas (square, sextuple, cg index) by its keys
// and converts to a square.  Throws UsageError on unknown shapes.
SemiMagicSquare payload_to_square(const json& j);

}  // namespace sms3
