#pragma once

// Finite multigraphs with per-vertex admissible-degree sets C(v).
// Vertex/edge ids are opaque strings externally and dense indices
// internally; everything is immutable after construction.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lyl/bigint.hpp"
#include "lyl/errors.hpp"
#include "lyl/poly.hpp"

namespace lyl {

class Graph {
public:
    // edges as pairs of external vertex ids; repeated pairs are parallel edges
    Graph(std::vector<std::string> vertex_ids,
          const std::vector<std::pair<std::string, std::string>>& edge_list)
        : ids_(std::move(vertex_ids)) {
        for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
            if (!index_.emplace(ids_[static_cast<std::size_t>(i)], i).second)
                throw InputError("duplicate vertex id '" + ids_[static_cast<std::size_t>(i)] + "'");
        }
        edges_.reserve(edge_list.size());
        for (const auto& [a, b] : edge_list) {
            int u = vertex_index(a), v = vertex_index(b);
            if (u == v) throw InputError("edge endpoints must be distinct ('" + a + "')");
            edges_.emplace_back(u, v);
        }
        degree_.assign(ids_.size(), 0);
        incident_.assign(ids_.size(), {});
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            degree_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].first)]++;
            degree_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].second)]++;
            incident_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].first)].push_back(e);
            incident_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].second)].push_back(e);
        }
        for (std::size_t v = 0; v < ids_.size(); ++v)
            if (degree_[v] == 0)
                throw InputError("vertex '" + ids_[v] + "' has degree 0");
    }

    int num_vertices() const { return static_cast<int>(ids_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::string& vertex_id(int v) const { return ids_[static_cast<std::size_t>(v)]; }
    int vertex_index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw InputError("unknown vertex id '" + id + "'");
        return it->second;
    }
    std::pair<int, int> edge(int e) const {
        if (e < 0 || e >= num_edges()) throw InputError("unknown edge id " + std::to_string(e));
        return edges_[static_cast<std::size_t>(e)];
    }
    int degree(int v) const { return degree_[check_vertex(v)]; }
    int max_degree() const {
        int d = 0;
        for (int x : degree_) d = std::max(d, x);
        return d;
    }
    const std::vector<int>& incident_edges(int v) const { return incident_[check_vertex(v)]; }

    // true when the vertex set splits into (part, complement) with every edge crossing
    bool is_valid_bipartition(const std::set<int>& side1) const {
        for (const auto& [u, v] : edges_) {
            bool a = side1.count(u) > 0, b = side1.count(v) > 0;
            if (a == b) return false;
        }
        return true;
    }

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> incident_;

    std::size_t check_vertex(int v) const {
        if (v < 0 || v >= num_vertices()) throw InputError("unknown vertex index " + std::to_string(v));
        return static_cast<std::size_t>(v);
    }
};

class ConstraintProfile {
public:
    // raw per-vertex degree sets, keyed by external id. Elements above d_v are
    // unattainable and dropped at normalization; an empty normalized set is an error.
    ConstraintProfile(const Graph& g, const std::map<std::string, std::vector<int>>& sets) {
        allowed_.resize(static_cast<std::size_t>(g.num_vertices()));
        std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
        for (const auto& [id, set] : sets) {
            int v = g.vertex_index(id);
            assign(g, v, set);
            seen[static_cast<std::size_t>(v)] = true;
        }
        for (int v = 0; v < g.num_vertices(); ++v)
            if (!seen[static_cast<std::size_t>(v)])
                throw InputError("constraint profile missing vertex '" + g.vertex_id(v) + "'");
    }

    // uniform profile C(v) = C for all v
    ConstraintProfile(const Graph& g, const std::vector<int>& uniform) {
        allowed_.resize(static_cast<std::size_t>(g.num_vertices()));
        for (int v = 0; v < g.num_vertices(); ++v) assign(g, v, uniform);
    }
    ConstraintProfile(const Graph& g, std::initializer_list<int> uniform)
        : ConstraintProfile(g, std::vector<int>(uniform)) {}

    const std::vector<int>& allowed(int v) const { return allowed_.at(static_cast<std::size_t>(v)); }
    int max_allowed(int v) const { return allowed(v).back(); }
    bool contains(int v, int k) const {
        const auto& a = allowed(v);
        return std::binary_search(a.begin(), a.end(), k);
    }
    bool zero_allowed_everywhere() const {
        for (const auto& a : allowed_)
            if (a.front() != 0) return false;
        return true;
    }
    // C(v) == {0,1,...,k_v} for every v
    bool is_down_set() const {
        for (const auto& a : allowed_)
            for (std::size_t k = 0; k < a.size(); ++k)
                if (a[k] != static_cast<int>(k)) return false;
        return true;
    }

private:
    std::vector<std::vector<int>> allowed_; // sorted, deduplicated, nonempty

    void assign(const Graph& g, int v, const std::vector<int>& set) {
        std::vector<int> norm;
        for (int k : set) {
            if (k < 0) throw InputError("negative degree in constraint set");
            if (k <= g.degree(v)) norm.push_back(k);
        }
        std::sort(norm.begin(), norm.end());
        norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
        if (norm.empty())
            throw InputError("constraint set for vertex '" + g.vertex_id(v) +
                             "' has no attainable degree");
        allowed_[static_cast<std::size_t>(v)] = std::move(norm);
    }
};

struct EdgeSubset {
    std::vector<int> edges; // edge ids, sorted unique

    static EdgeSubset of(std::vector<int> e) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        return EdgeSubset{std::move(e)};
    }
    static EdgeSubset from_mask(std::uint64_t mask) {
        EdgeSubset s;
        for (int i = 0; mask; ++i, mask >>= 1)
            if (mask & 1ULL) s.edges.push_back(i);
        return s;
    }
    std::size_t size() const { return edges.size(); }
};

inline int degree_in_subset(const Graph& g, const EdgeSubset& m, int v) {
    if (v < 0 || v >= g.num_vertices()) throw InputError("unknown vertex index");
    int d = 0;
    for (int e : m.edges) {
        auto [a, b] = g.edge(e);
        if (a == v || b == v) ++d;
    }
    return d;
}

inline bool is_admissible(const Graph& g, const ConstraintProfile& cp, const EdgeSubset& m) {
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int e : m.edges) {
        auto [a, b] = g.edge(e);
        deg[static_cast<std::size_t>(a)]++;
        deg[static_cast<std::size_t>(b)]++;
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!cp.contains(v, deg[static_cast<std::size_t>(v)])) return false;
    return true;
}

// p_{C,d}(z) = sum_{k in C, k <= d} binom(d,k) z^k
inline CountPolynomial vertex_polynomial(const std::vector<int>& C, int d) {
    if (d < 1) throw InputError("vertex polynomial needs degree >= 1");
    if (C.empty()) throw InputError("vertex polynomial needs a nonempty degree set");
    int kmax = 0;
    for (int k : C) {
        if (k < 0) throw InputError("negative degree in constraint set");
        if (k <= d) kmax = std::max(kmax, k);
    }
    std::vector<BigInt> c(static_cast<std::size_t>(kmax) + 1, BigInt(0));
    bool any = false;
    for (int k : C)
        if (k <= d) {
            c[static_cast<std::size_t>(k)] = binomial(static_cast<unsigned>(d), static_cast<unsigned>(k));
            any = true;
        }
    if (!any) throw InputError("no element of C is attainable at degree " + std::to_string(d));
    return CountPolynomial(std::move(c));
}

inline CountPolynomial vertex_polynomial(const Graph& g, const ConstraintProfile& cp, int v) {
    return vertex_polynomial(cp.allowed(v), g.degree(v));
}

} // namespace lyl
