#pragma once

// Built-in graph families used by the CLI and the test instances.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lyl/errors.hpp"
#include "lyl/graph.hpp"
#include "lyl/prng.hpp"

namespace lyl {

namespace gen_detail {
inline std::vector<std::string> numbered(const std::string& prefix, int n) {
    std::vector<std::string> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
    return ids;
}
} // namespace gen_detail

inline Graph make_path(int n) {
    if (n < 2) throw InputError("path needs n >= 2 vertices");
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
    return Graph(gen_detail::numbered("v", n), e);
}

inline Graph make_cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3 vertices");
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
    return Graph(gen_detail::numbered("v", n), e);
}

inline Graph make_complete(int n) {
    if (n < 2) throw InputError("complete graph needs n >= 2");
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back("v" + std::to_string(i), "v" + std::to_string(j));
    return Graph(gen_detail::numbered("v", n), e);
}

inline Graph make_grid(int w, int h) {
    if (w < 1 || h < 1 || w * h < 2) throw InputError("grid needs at least two vertices");
    auto id = [](int x, int y) { return "v" + std::to_string(x) + "_" + std::to_string(y); };
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> e;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            ids.push_back(id(x, y));
            if (x + 1 < w) e.emplace_back(id(x, y), id(x + 1, y));
            if (y + 1 < h) e.emplace_back(id(x, y), id(x, y + 1));
        }
    return Graph(std::move(ids), e);
}

// Patch of the honeycomb lattice: the central hexagon plus r rings of
// hexagons around it (max degree 3).
inline Graph make_hex_patch(int r) {
    if (r < 0) throw InputError("hex patch needs r >= 0");
    // hexagon cells in axial coordinates within radius r
    std::set<std::pair<int, int>> cells;
    for (int q = -r; q <= r; ++q)
        for (int s = -r; s <= r; ++s)
            if (std::abs(q + s) <= r) cells.insert({q, s});
    // corner vertices of cell (q,s) on a doubled integer lattice; shared corners dedupe
    auto corner = [](int q, int s, int k) {
        // cell center in doubled cartesian coords
        int cx = 4 * q + 2 * s;
        int cy = 3 * s;
        static const int dx[6] = {2, 2, 0, -2, -2, 0};
        static const int dy[6] = {-1, 1, 2, 1, -1, -2};
        return std::pair<int, int>{cx + dx[k], cy + dy[k]};
    };
    std::map<std::pair<int, int>, std::string> names;
    std::set<std::pair<std::string, std::string>> edge_set;
    for (auto [q, s] : cells) {
        std::vector<std::string> c(6);
        for (int k = 0; k < 6; ++k) {
            auto pt = corner(q, s, k);
            auto it = names.find(pt);
            if (it == names.end()) {
                std::string nm = "h" + std::to_string(pt.first) + "_" + std::to_string(pt.second);
                it = names.emplace(pt, nm).first;
            }
            c[static_cast<std::size_t>(k)] = it->second;
        }
        for (int k = 0; k < 6; ++k) {
            std::string a = c[static_cast<std::size_t>(k)], b = c[static_cast<std::size_t>((k + 1) % 6)];
            if (b < a) std::swap(a, b);
            edge_set.insert({a, b});
        }
    }
    std::vector<std::string> ids;
    for (const auto& [pt, nm] : names) ids.push_back(nm);
    std::vector<std::pair<std::string, std::string>> e(edge_set.begin(), edge_set.end());
    return Graph(std::move(ids), e);
}

// Uniform random simple graph with n vertices and m edges. Isolated vertices
// are pruned (every vertex of a Graph must have positive degree).
inline Graph make_gnm(int n, int m, std::uint64_t seed) {
    if (n < 2) throw InputError("gnm needs n >= 2");
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 1 || m > max_m) throw InputError("gnm edge count out of range");
    SplitMix64 rng(seed);
    std::set<std::pair<int, int>> chosen;
    while (static_cast<int>(chosen.size()) < m) {
        int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        chosen.insert({a, b});
    }
    std::set<int> used;
    for (auto [a, b] : chosen) { used.insert(a); used.insert(b); }
    std::vector<std::string> ids;
    for (int v : used) ids.push_back("v" + std::to_string(v));
    std::vector<std::pair<std::string, std::string>> e;
    for (auto [a, b] : chosen)
        e.emplace_back("v" + std::to_string(a), "v" + std::to_string(b));
    return Graph(std::move(ids), e);
}

} // namespace lyl
