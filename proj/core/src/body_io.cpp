#include "latgon/body_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "latgon/errors.hpp"

namespace latgon {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("invalid ") + what + " JSON: " + e.what());
    }
}

std::vector<Vec2> vec2_list(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ValidationError(std::string("expected array field '") + key + "'");
    std::vector<Vec2> out;
    for (const auto& item : j[key]) {
        if (!item.is_array() || item.size() != 2)
            throw ValidationError(std::string("entries of '") + key + "' must be [x, y] pairs");
        out.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    return out;
}

std::vector<LatticeVector> lattice_list(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ValidationError(std::string("expected array field '") + key + "'");
    std::vector<LatticeVector> out;
    for (const auto& item : j[key]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw ValidationError(std::string("entries of '") + key +
                                  "' must be integer [x, y] pairs");
        out.push_back({item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
    }
    return out;
}

json vec2_array(const std::vector<Vec2>& v) {
    json arr = json::array();
    for (const Vec2& p : v) arr.push_back({p.x, p.y});
    return arr;
}

json lattice_array(const std::vector<LatticeVector>& v) {
    json arr = json::array();
    for (const LatticeVector& p : v) arr.push_back({p.x, p.y});
    return arr;
}

}  // namespace

ConvexBody body_from_json(const std::string& text) {
    const json j = parse(text, "body");
    if (!j.contains("type") || !j["type"].is_string())
        throw ValidationError("body JSON needs a string 'type'");
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "polygon") return ConvexBody::polygon(vec2_list(j, "vertices"));
        if (type == "radial") {
            if (!j.contains("samples") || !j["samples"].is_array())
                throw ValidationError("radial body needs 'samples'");
            return ConvexBody::radial(RadialFunction(j["samples"].get<std::vector<double>>()));
        }
        if (type == "ellipse_focus") {
            if (!j.contains("p") || !j.contains("e") || !j["e"].is_array() || j["e"].size() != 2)
                throw ValidationError("ellipse_focus body needs 'p' and 'e':[ex,ey]");
            return ConvexBody::ellipse_focus(j["p"].get<double>(),
                                             {j["e"][0].get<double>(), j["e"][1].get<double>()});
        }
        if (type == "disk") {
            if (j.contains("radius")) return ConvexBody::disk(j["radius"].get<double>());
            return ConvexBody::disk();
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed body JSON: ") + e.what());
    }
    throw ValidationError("unknown body type '" + type + "'");
}

std::string body_to_json(const ConvexBody& body) {
    json j;
    if (const auto* poly = std::get_if<ConvexBody::PolygonRep>(&body.representation())) {
        j["type"] = "polygon";
        j["vertices"] = vec2_array(poly->vertices);
    } else if (const auto* rad = std::get_if<ConvexBody::RadialRep>(&body.representation())) {
        j["type"] = "radial";
        j["samples"] = rad->rf.samples();
    } else {
        const auto& el = std::get<ConvexBody::EllipseFocusRep>(body.representation());
        j["type"] = "ellipse_focus";
        j["p"] = el.p;
        j["e"] = {el.e.x, el.e.y};
    }
    return j.dump();
}

ConvexBody load_body(const std::string& path) {
    return body_from_json(read_text_file(path));
}

LatticePolygon lattice_polygon_from_json(const std::string& text) {
    return LatticePolygon(lattice_list(parse(text, "lattice polygon"), "vertices"));
}

std::string lattice_polygon_to_json(const LatticePolygon& polygon) {
    json j;
    j["vertices"] = lattice_array(polygon.vertices());
    return j.dump();
}

LatticePolygon load_lattice_polygon(const std::string& path) {
    return lattice_polygon_from_json(read_text_file(path));
}

std::vector<LatticeVector> edge_set_from_json(const std::string& text) {
    return lattice_list(parse(text, "edge set"), "edges");
}

std::string edge_set_to_json(const std::vector<LatticeVector>& edges) {
    json j;
    j["edges"] = lattice_array(edges);
    return j.dump();
}

std::string minimizer_result_to_json(const MinimizerResult& result) {
    json j;
    j["vertices"] = lattice_array(result.polygon.vertices());
    j["edges"] = lattice_array(result.polygon.edges());
    j["perimeter"] = result.perimeter;
    j["n"] = result.n;
    j["method"] = method_name(result.method);
    j["certified"] = result.certified;
    if (result.special_edge)
        j["special_edge"] = {result.special_edge->x, result.special_edge->y};
    return j.dump();
}

std::string vp_solution_to_json(const VPSolution& sol) {
    json j;
    j["a"] = sol.a;
    j["b"] = sol.b;
    j["c"] = sol.c;
    j["alpha"] = sol.alpha;
    j["objective"] = sol.objective;
    j["residuals"] = {sol.residuals[0], sol.residuals[1], sol.residuals[2]};
    j["r_samples"] = sol.r.samples();
    return j.dump();
}

std::string limit_polygon_to_json(const LimitPolygon& lp) {
    json j;
    j["boundary"] = vec2_array(lp.boundary);
    j["translation"] = {lp.translation.x, lp.translation.y};
    return j.dump();
}

LimitPolygon limit_polygon_from_json(const std::string& text) {
    const json j = parse(text, "limit polygon");
    LimitPolygon lp;
    lp.boundary = vec2_list(j, "boundary");
    if (j.contains("translation") && j["translation"].is_array() && j["translation"].size() == 2)
        lp.translation = {j["translation"][0].get<double>(), j["translation"][1].get<double>()};
    return lp;
}

std::string convergence_record_to_json(const ConvergenceRecord& rec) {
    json j;
    j["n"] = rec.n;
    if (rec.error.empty()) {
        j["perimeter"] = rec.perimeter;
        j["scaled"] = rec.scaled;
        j["alpha_ref"] = rec.alpha_ref;
        j["lower_scaled"] = rec.lower_scaled;
        j["hausdorff_C"] = rec.hausdorff_C;
        j["hausdorff_P"] = rec.hausdorff_P;
        if (rec.exact_available) {
            j["exact_perimeter"] = rec.exact_perimeter;
            j["exact_scaled"] = rec.exact_scaled;
        }
    } else {
        j["error"] = rec.error;
    }
    return j.dump();
}

std::string convergence_records_to_jsonl(const std::vector<ConvergenceRecord>& records) {
    std::string out;
    for (const ConvergenceRecord& rec : records) {
        out += convergence_record_to_json(rec);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw Error("write failed for '" + path + "'");
}

}  // namespace latgon
