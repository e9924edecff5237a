#include "sgp/cert_json.hpp"

#include "sgp/errors.hpp"

namespace sgp {

using nlohmann::ordered_json;

ordered_json certificate_to_json(const Certificate& cert, const std::string& graph_spec,
                                 const std::optional<LayerLabeling>& labeling) {
    ordered_json j;
    j["graph"] = graph_spec;
    j["vertices"] = cert.vertices;
    ordered_json geos = ordered_json::array();
    for (const auto& rec : cert.geodesics) {
        ordered_json g;
        g["u"] = rec.u;
        g["v"] = rec.v;
        g["path"] = rec.path;
        geos.push_back(std::move(g));
    }
    j["geodesics"] = std::move(geos);
    if (labeling) {
        ordered_json coords = ordered_json::object();
        for (int v : cert.vertices) {
            auto [i, jj] = labeling->decode(v);
            coords[std::to_string(v)] = ordered_json::array({i, jj});
        }
        j["coords"] = std::move(coords);
    }
    return j;
}

Certificate certificate_from_json(const ordered_json& root) {
    const ordered_json* j = &root;
    if (root.is_object() && root.contains("certificate")) j = &root.at("certificate");
    if (!j->is_object()) throw ParseError("certificate must be a JSON object");
    if (!j->contains("vertices") || !(*j)["vertices"].is_array())
        throw ParseError("certificate needs a 'vertices' array");
    if (!j->contains("geodesics") || !(*j)["geodesics"].is_array())
        throw ParseError("certificate needs a 'geodesics' array");

    Certificate cert;
    for (const auto& v : (*j)["vertices"]) {
        if (!v.is_number_integer()) throw ParseError("vertex ids must be integers");
        cert.vertices.push_back(v.get<int>());
    }
    for (const auto& rec : (*j)["geodesics"]) {
        if (!rec.is_object() || !rec.contains("u") || !rec.contains("v") || !rec.contains("path"))
            throw ParseError("each geodesic needs 'u', 'v' and 'path'");
        if (!rec["u"].is_number_integer() || !rec["v"].is_number_integer() ||
            !rec["path"].is_array())
            throw ParseError("malformed geodesic record");
        PairGeodesic pg;
        pg.u = rec["u"].get<int>();
        pg.v = rec["v"].get<int>();
        for (const auto& p : rec["path"]) {
            if (!p.is_number_integer()) throw ParseError("path entries must be integers");
            pg.path.push_back(p.get<int>());
        }
        cert.geodesics.push_back(std::move(pg));
    }
    return cert;
}

Certificate certificate_from_json_text(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return certificate_from_json(j);
}

std::string coverage_report_to_json(const CoverageReport& report) {
    ordered_json j;
    j["valid"] = report.valid;
    j["uncovered"] = report.uncovered;
    j["violations"] = report.violations;
    return j.dump(2);
}

}  // namespace sgp
