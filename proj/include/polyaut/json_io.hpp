#ifndef POLYAUT_JSON_IO_HPP
#define POLYAUT_JSON_IO_HPP

#include <polyaut/classifier.hpp>
#include <polyaut/errors.hpp>
#include <polyaut/poly_map.hpp>
#include <polyaut/poly_text.hpp>
#include <polyaut/reduction.hpp>

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace polyaut {

using Json = nlohmann::ordered_json;

/// -inf is written as the string "-inf".
inline Json degree_to_json(const ExtendedDegree& d) {
    return d.is_finite() ? Json(d.value()) : Json("-inf");
}

inline Json multidegree_to_json(const Multidegree& m) {
    Json out = Json::array();
    for (const auto& d : m.degrees) {
        out.push_back(degree_to_json(d));
    }
    return out;
}

/// {"vars": [...], "components": ["<poly text>", ...]}
inline Json polymap_to_json(const PolyMap& f, const std::vector<std::string>& vars) {
    Json out;
    out["vars"] = vars;
    Json cs = Json::array();
    for (const auto& c : f.components()) {
        cs.push_back(render(c, vars));
    }
    out["components"] = std::move(cs);
    return out;
}

inline Json polymap_to_json(const PolyMap& f) {
    return polymap_to_json(f, default_var_names(f.dimension()));
}

struct NamedMap {
    PolyMap map;
    std::vector<std::string> vars;
};

inline NamedMap polymap_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("components")) {
        throw FormatError("map document needs \"vars\" and \"components\"");
    }
    const Json& vars = doc["vars"];
    const Json& cs = doc["components"];
    if (!vars.is_array() || !cs.is_array() || vars.empty()) {
        throw FormatError("\"vars\" and \"components\" must be non-empty arrays");
    }
    std::vector<std::string> names;
    for (const auto& v : vars) {
        if (!v.is_string()) {
            throw FormatError("variable names must be strings");
        }
        names.push_back(v.get<std::string>());
    }
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
        throw FormatError("duplicate variable name");
    }
    if (cs.size() != names.size()) {
        throw FormatError("component count must equal variable count");
    }
    std::vector<Polynomial> components;
    for (const auto& c : cs) {
        if (!c.is_string()) {
            throw FormatError("components must be polynomial strings");
        }
        components.push_back(parse(c.get<std::string>(), names));
    }
    return NamedMap{PolyMap(std::move(components)), std::move(names)};
}

inline NamedMap parse_polymap_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return polymap_from_json(doc);
}

/// Elementary steps in application order; indices are 1-based.
inline Json steps_to_json(const std::vector<ElementaryStep>& steps,
                          const std::vector<std::string>& vars) {
    Json out = Json::array();
    for (const auto& s : steps) {
        Json j;
        j["index"] = s.index + 1;
        j["shift"] = render(s.shift, vars);
        out.push_back(std::move(j));
    }
    return out;
}

/// {"status", "rule", "citation", "witness", "sorted_input", "factorization"}
inline Json verdict_to_json(const Verdict& v) {
    const auto vars = default_var_names(3);
    Json out;
    out["status"] = std::string(to_string(v.status));
    out["rule"] = std::string(to_string(v.rule));
    out["citation"] = v.citation;
    out["witness"] = v.witness ? polymap_to_json(v.witness->map, vars) : Json(nullptr);
    out["sorted_input"] = v.sorted_input;
    out["factorization"] = v.witness ? steps_to_json(v.witness->steps, vars) : Json(nullptr);
    return out;
}

/// g is rendered over (u, v) standing for the two source coordinates.
inline Json reduction_to_json(const Reduction& r) {
    Json out;
    out["target"] = r.target + 1;
    out["sources"] = {r.sources[0] + 1, r.sources[1] + 1};
    out["g_vars"] = {"u", "v"};
    out["g"] = render(r.g, {"u", "v"});
    out["achieved_degree"] = degree_to_json(r.achieved_degree);
    return out;
}

} // namespace polyaut

#endif // POLYAUT_JSON_IO_HPP
