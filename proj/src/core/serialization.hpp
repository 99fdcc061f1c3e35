#pragma once

#include <string>

#include <json.hpp>

#include "core/abelian_group.hpp"
#include "core/classifier.hpp"
#include "core/int_matrix.hpp"

namespace meshk0 {

using Json = nlohmann::json;

// {"rank": r, "torsion": [d1, ..., ds]}; orders beyond 64 bits are strings.
Json group_to_json(const AbelianGroup& group);
AbelianGroup group_from_json(const Json& j);

// {"rows": r, "cols": c, "data": [row-major decimal strings]}
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json profile_to_json(const InvariantProfile& profile);
InvariantProfile profile_from_json(const Json& j);
std::string profile_to_text(const InvariantProfile& profile);

Json verdict_to_json(const Verdict& verdict, const InvariantProfile& p1, const InvariantProfile& p2);
Verdict verdict_from_json(const Json& j);

const char* characteristic_name(Characteristic characteristic);
// "0" or "2"; throws ParseError otherwise.
Characteristic parse_characteristic(const std::string& text);

}  // namespace meshk0
