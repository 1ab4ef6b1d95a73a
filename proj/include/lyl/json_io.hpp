#pragma once

// Instance file formats:
//   graph: {"vertices":[{"id":"a","C":[0,1]},...],"edges":[["a","b"],...]}
//          (repeated pairs are parallel edges)
//   spin:  {"sites":["x","y",...],"pairs":[["x","y",1.0],...],"beta":0.3}

#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lyl/errors.hpp"
#include "lyl/graph.hpp"
#include "lyl/spin.hpp"

namespace lyl {

using json = nlohmann::ordered_json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

inline bool json_is_graph(const json& j) { return j.contains("vertices"); }
inline bool json_is_spin(const json& j) { return j.contains("sites"); }

inline std::pair<Graph, ConstraintProfile> parse_graph_json(const json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw InputError("graph instance needs a 'vertices' array");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InputError("graph instance needs an 'edges' array");
    std::vector<std::string> ids;
    std::map<std::string, std::vector<int>> sets;
    for (const auto& v : j["vertices"]) {
        if (!v.contains("id") || !v["id"].is_string())
            throw InputError("vertex entry needs a string 'id'");
        std::string id = v["id"].get<std::string>();
        ids.push_back(id);
        if (!v.contains("C") || !v["C"].is_array())
            throw InputError("vertex '" + id + "' needs a degree set 'C'");
        sets[id] = v["C"].get<std::vector<int>>();
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("edge entries are two-element arrays of vertex ids");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    Graph g(std::move(ids), edges);
    ConstraintProfile cp(g, sets);
    return {std::move(g), std::move(cp)};
}

inline SpinSystem parse_spin_json(const json& j, bool ordered_sum = false) {
    if (!j.contains("sites") || !j["sites"].is_array())
        throw InputError("spin instance needs a 'sites' array");
    SpinSystem s;
    s.sites = j["sites"].get<std::vector<std::string>>();
    if (j.contains("pairs"))
        for (const auto& p : j["pairs"]) {
            if (!p.is_array() || p.size() != 3)
                throw InputError("pair entries are [site, site, J]");
            int a = s.site_index(p[0].get<std::string>());
            int b = s.site_index(p[1].get<std::string>());
            if (a == b) throw InputError("pair couples a site with itself");
            s.pairs.emplace_back(a, b, p[2].get<double>());
        }
    if (!j.contains("beta") || !j["beta"].is_number())
        throw InputError("spin instance needs a numeric 'beta'");
    s.beta = j["beta"].get<double>();
    if (s.beta < 0.0) throw InputError("beta must be nonnegative");
    s.ordered_sum = ordered_sum;
    return s;
}

} // namespace lyl
