#ifndef SGP_CERT_JSON_HPP
#define SGP_CERT_JSON_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sgp/graph.hpp"
#include "sgp/strong_geodetic.hpp"

namespace sgp {

// Certificate wire schema:
//   {"graph": "<spec>", "vertices": [ids...], "geodesics": [{"u","v","path"}...],
//    "coords": {"<id>": [i, j], ...}}   (coords only when a labeling is known)
// Keys keep insertion order, so deterministic inputs serialize byte-identically.
nlohmann::ordered_json certificate_to_json(const Certificate& cert, const std::string& graph_spec,
                                           const std::optional<LayerLabeling>& labeling);

// Accepts either a bare certificate object or any object with a
// "certificate" member (e.g. solve output). Throws ParseError on schema
// violations.
Certificate certificate_from_json(const nlohmann::ordered_json& j);
Certificate certificate_from_json_text(const std::string& text);

std::string coverage_report_to_json(const CoverageReport& report);

}  // namespace sgp

#endif  // SGP_CERT_JSON_HPP
