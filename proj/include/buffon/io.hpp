#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "buffon/discrepancy.hpp"
#include "buffon/domain.hpp"
#include "buffon/set.hpp"
#include "json.hpp"

namespace buffon {

inline constexpr const char* kVersion = "0.1.0";

nlohmann::json primitive_to_json(const Primitive& prim);
Primitive primitive_from_json(const nlohmann::json& j);

// {"primitives": [...], "total_length": L, "metadata": {...}}
nlohmann::json set_to_json(const RectifiableSet& set);
// Throws std::invalid_argument on schema errors or a total_length that
// disagrees with the primitives.
RectifiableSet set_from_json(const nlohmann::json& j);

nlohmann::json line_to_json(const LineCoords& line);
LineCoords line_from_json(const nlohmann::json& j);

// Infinite gaps serialize as null.
nlohmann::json report_to_json(const DiscrepancyReport& report, const nlohmann::json& config = nlohmann::json::object());
DiscrepancyReport report_from_json(const nlohmann::json& j);

/// Domain grammar:
///   disk[:r[:cx,cy]]            square:side[:x0,y0]  (lower-left corner)
///   polygon:x1,y1;x2,y2;...     reuleaux:width[:cx,cy[,rotation]]
ConvexDomain parse_domain_spec(std::string_view spec);
nlohmann::json domain_to_json(const ConvexDomain& domain);

nlohmann::json read_json_file(const std::filesystem::path& path);
// Writes j.dump(indent) followed by a newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j, int indent = 2);

}  // namespace buffon
