#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stresslab/complex.hpp"
#include "stresslab/realization.hpp"

namespace stresslab {

// Facet-list text: one facet per line, whitespace-separated vertex labels,
// '#' starts a comment line.
inline SimplicialComplex read_facets_text(std::istream& in) {
    std::vector<std::vector<std::string>> facets;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line.substr(line.find_first_not_of(" \t") == std::string::npos
                                              ? line.size()
                                              : line.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::istringstream ls(trimmed);
        std::vector<std::string> f;
        std::string v;
        while (ls >> v) f.push_back(v);
        if (!f.empty()) facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

inline void write_facets_text(std::ostream& out, const SimplicialComplex& c) {
    for (Face f : c.facets()) {
        bool first = true;
        for (int v : face_vertices(f)) {
            if (!first) out << ' ';
            out << c.label(v);
            first = false;
        }
        out << '\n';
    }
}

inline SimplicialComplex read_facets_json(const nlohmann::json& j) {
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets")) {
        std::vector<std::string> verts;
        for (const auto& v : f) {
            if (v.is_string()) verts.push_back(v.get<std::string>());
            else verts.push_back(std::to_string(v.get<long long>()));
        }
        facets.push_back(std::move(verts));
    }
    return SimplicialComplex::from_facets(facets);
}

inline nlohmann::ordered_json facets_json(const SimplicialComplex& c) {
    nlohmann::ordered_json j;
    j["facets"] = nlohmann::ordered_json::array();
    for (Face f : c.facets()) {
        nlohmann::ordered_json verts = nlohmann::ordered_json::array();
        for (int v : face_vertices(f)) verts.push_back(c.label(v));
        j["facets"].push_back(verts);
    }
    return j;
}

inline SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        in >> j;
        return read_facets_json(j);
    }
    return read_facets_text(in);
}

// Coordinate file: {"vertices": {"label": ["p/q", ...] or numbers}}
inline Realization read_coordinates_json(const SimplicialComplex& c, const nlohmann::json& j,
                                         const Field& f) {
    const auto& verts = j.at("vertices");
    int l = -1;
    std::map<std::string, std::vector<std::string>> labeled;
    for (auto it = verts.begin(); it != verts.end(); ++it) {
        std::vector<std::string> coords;
        for (const auto& x : *it) {
            if (x.is_string()) coords.push_back(x.get<std::string>());
            else coords.push_back(std::to_string(x.get<long long>()));
        }
        if (l < 0) l = static_cast<int>(coords.size());
        labeled[it.key()] = std::move(coords);
    }
    if (l <= 0) throw std::runtime_error("empty coordinate file");
    return realization_from_labels(c, l, f, labeled);
}

inline Realization read_coordinates_file(const SimplicialComplex& c, const std::string& path,
                                         const Field& f) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return read_coordinates_json(c, j, f);
}

inline nlohmann::ordered_json coordinates_json(const SimplicialComplex& c, const Realization& r) {
    nlohmann::ordered_json verts;
    for (int v = 0; v < c.n_vertices(); ++v) {
        nlohmann::json col = nlohmann::json::array();
        for (const auto& x : r.coord(v)) col.push_back(x.str());
        verts[c.label(v)] = col;
    }
    nlohmann::ordered_json j;
    j["vertices"] = verts;
    return j;
}

} // namespace stresslab
