#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "f1q/quiver.hpp"

namespace f1q {

using Json = nlohmann::ordered_json;

// Parse errors carry the JSON path of the offending field and, for syntax
// errors, the line and column.
Quiver parse_quiver(std::string_view text);
Quiver quiver_from_json(const Json& j, const std::string& path = "$");
Json quiver_to_json(const Quiver& q);
std::string emit_quiver(const Quiver& q);

Winding parse_winding(std::string_view text);
Winding winding_from_json(const Json& j, const std::string& path = "$");
Json winding_to_json(const QuiverMap& m);
std::string emit_winding(const QuiverMap& m);

Json parse_json(std::string_view text);
std::string read_file(const std::string& path);

}  // namespace f1q
