#pragma once

// The two independent computations of the graph-counting polynomial
// P_(C)(z) = sum over admissible edge subsets M of z^|M|:
//   * count_by_enumeration — direct walk over all 2^|E| subsets (the oracle),
//   * count_by_frontier_dp — per-edge dynamic programming over partial
//     vertex degrees, scalable to graphs far beyond the enumeration cap.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "lyl/bigint.hpp"
#include "lyl/errors.hpp"
#include "lyl/graph.hpp"
#include "lyl/poly.hpp"

namespace lyl {

inline constexpr int kDefaultEnumerationCap = 24;
inline constexpr std::size_t kDefaultDpStateCap = 1u << 20;

inline CountPolynomial count_by_enumeration(const Graph& g, const ConstraintProfile& cp,
                                            int cap_edges = kDefaultEnumerationCap) {
    const int E = g.num_edges();
    if (E > cap_edges)
        throw ResourceError("enumeration cap exceeded: |E| = " + std::to_string(E) +
                            " > cap " + std::to_string(cap_edges));
    const int V = g.num_vertices();
    // allowed degree sets as bitmasks (degrees <= |E| <= cap < 32)
    std::vector<std::uint32_t> allowed(static_cast<std::size_t>(V), 0u);
    for (int v = 0; v < V; ++v)
        for (int k : cp.allowed(v))
            if (k < 32) allowed[static_cast<std::size_t>(v)] |= (1u << k);
    std::vector<std::pair<int, int>> ends(static_cast<std::size_t>(E));
    for (int e = 0; e < E; ++e) ends[static_cast<std::size_t>(e)] = g.edge(e);

    const std::uint64_t total = 1ULL << E;
    auto count_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& acc) {
        std::vector<int> deg(static_cast<std::size_t>(V));
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            std::fill(deg.begin(), deg.end(), 0);
            int sz = 0;
            for (std::uint64_t m = mask; m;) {
                int e = std::countr_zero(m);
                m &= m - 1;
                deg[static_cast<std::size_t>(ends[static_cast<std::size_t>(e)].first)]++;
                deg[static_cast<std::size_t>(ends[static_cast<std::size_t>(e)].second)]++;
                ++sz;
            }
            bool ok = true;
            for (int v = 0; v < V; ++v) {
                int d = deg[static_cast<std::size_t>(v)];
                if (d >= 32 || !(allowed[static_cast<std::size_t>(v)] >> d & 1u)) { ok = false; break; }
            }
            if (ok) acc[static_cast<std::size_t>(sz)]++;
        }
    };

    // fixed chunking: the reduction order never depends on the worker count
    const unsigned chunks = 32;
    std::vector<std::vector<std::uint64_t>> partial(
        chunks, std::vector<std::uint64_t>(static_cast<std::size_t>(E) + 1, 0));
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency() ? std::thread::hardware_concurrency() : 1u, chunks);
    if (E <= 12 || workers <= 1) {
        for (unsigned c = 0; c < chunks; ++c)
            count_range(total * c / chunks, total * (c + 1) / chunks, partial[c]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (unsigned c = w; c < chunks; c += workers)
                    count_range(total * c / chunks, total * (c + 1) / chunks, partial[c]);
            });
        for (auto& t : pool) t.join();
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(E) + 1, BigInt(0));
    for (unsigned c = 0; c < chunks; ++c)
        for (std::size_t m = 0; m <= static_cast<std::size_t>(E); ++m)
            if (partial[c][m]) coeffs[m] += BigInt(static_cast<unsigned long long>(partial[c][m]));
    return CountPolynomial(std::move(coeffs));
}

// Greedy edge order for the frontier DP: prefer edges that close the most
// active vertices, then the smaller resulting frontier, then the edge id.
inline std::vector<int> choose_edge_order(const Graph& g) {
    const int E = g.num_edges();
    std::vector<int> remaining(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) remaining[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<bool> active(static_cast<std::size_t>(g.num_vertices()), false);
    std::vector<bool> done(static_cast<std::size_t>(E), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(E));
    int frontier = 0;
    for (int step = 0; step < E; ++step) {
        int best = -1, best_closes = -1, best_front = 0;
        for (int e = 0; e < E; ++e) {
            if (done[static_cast<std::size_t>(e)]) continue;
            auto [u, v] = g.edge(e);
            int closes = 0, opens = 0;
            if (remaining[static_cast<std::size_t>(u)] == 1) ++closes;
            else if (!active[static_cast<std::size_t>(u)]) ++opens;
            if (remaining[static_cast<std::size_t>(v)] == 1) ++closes;
            else if (!active[static_cast<std::size_t>(v)]) ++opens;
            int front = frontier + opens - closes +
                        ((remaining[static_cast<std::size_t>(u)] == 1 && !active[static_cast<std::size_t>(u)]) ? 1 : 0) +
                        ((remaining[static_cast<std::size_t>(v)] == 1 && !active[static_cast<std::size_t>(v)]) ? 1 : 0);
            if (best < 0 || closes > best_closes || (closes == best_closes && front < best_front)) {
                best = e;
                best_closes = closes;
                best_front = front;
            }
        }
        auto [u, v] = g.edge(best);
        for (int w : {u, v}) {
            if (!active[static_cast<std::size_t>(w)]) { active[static_cast<std::size_t>(w)] = true; ++frontier; }
            if (--remaining[static_cast<std::size_t>(w)] == 0) { active[static_cast<std::size_t>(w)] = false; --frontier; }
        }
        done[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
    }
    return order;
}

inline CountPolynomial count_by_frontier_dp(const Graph& g, const ConstraintProfile& cp,
                                            const std::vector<int>& edge_order,
                                            std::size_t state_cap = kDefaultDpStateCap) {
    const int E = g.num_edges();
    {
        std::vector<int> sorted = edge_order;
        std::sort(sorted.begin(), sorted.end());
        for (int e = 0; e < E; ++e)
            if (sorted[static_cast<std::size_t>(e)] != e)
                throw InputError("edge order is not a permutation of the edge set");
    }
    // per vertex: position of its last incident edge in the order
    std::vector<int> last_step(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int step = 0; step < E; ++step) {
        auto [u, v] = g.edge(edge_order[static_cast<std::size_t>(step)]);
        last_step[static_cast<std::size_t>(u)] = step;
        last_step[static_cast<std::size_t>(v)] = step;
    }

    // a state: chosen-degree per active vertex (ordered map keeps runs deterministic)
    using Key = std::vector<std::pair<int, int>>; // (vertex, count), sorted by vertex
    using Coeffs = std::vector<BigInt>;           // index = subset size
    std::map<Key, Coeffs> states;
    states.emplace(Key{}, Coeffs{BigInt(1)});

    auto bump = [](Coeffs& into, const Coeffs& from, int shift) {
        if (into.size() < from.size() + static_cast<std::size_t>(shift))
            into.resize(from.size() + static_cast<std::size_t>(shift), BigInt(0));
        for (std::size_t i = 0; i < from.size(); ++i)
            into[i + static_cast<std::size_t>(shift)] += from[i];
    };

    for (int step = 0; step < E; ++step) {
        int e = edge_order[static_cast<std::size_t>(step)];
        auto [u, v] = g.edge(e);
        std::map<Key, Coeffs> next;
        for (auto& [key, coeffs] : states) {
            // counts of u and v in this state (0 if not yet active)
            auto get = [&](int w) {
                for (const auto& [vert, cnt] : key)
                    if (vert == w) return cnt;
                return 0;
            };
            auto with = [&](int cu, int cv) {
                Key k;
                k.reserve(key.size() + 2);
                bool pu = false, pv = false;
                auto push = [&](int vert, int cnt) {
                    if (vert == u) { k.emplace_back(vert, cu); pu = true; }
                    else if (vert == v) { k.emplace_back(vert, cv); pv = true; }
                    else k.emplace_back(vert, cnt);
                };
                for (const auto& [vert, cnt] : key) push(vert, cnt);
                if (!pu) k.emplace_back(u, cu);
                if (!pv) k.emplace_back(v, cv);
                std::sort(k.begin(), k.end());
                // retire vertices whose incident edges are all processed
                Key out;
                for (const auto& [vert, cnt] : k) {
                    if (last_step[static_cast<std::size_t>(vert)] == step) {
                        if (!cp.contains(vert, cnt)) return std::pair<bool, Key>{false, {}};
                    } else {
                        out.emplace_back(vert, cnt);
                    }
                }
                return std::pair<bool, Key>{true, std::move(out)};
            };
            int cu = get(u), cv = get(v);
            // exclude e
            if (auto [ok, k] = with(cu, cv); ok) bump(next[std::move(k)], coeffs, 0);
            // include e (prune counts already above max C(v))
            if (cu + 1 <= cp.max_allowed(u) && cv + 1 <= cp.max_allowed(v)) {
                if (auto [ok, k] = with(cu + 1, cv + 1); ok) bump(next[std::move(k)], coeffs, 1);
            }
            if (next.size() > state_cap)
                throw ResourceError("frontier state cap exceeded (" + std::to_string(state_cap) +
                                    " states); a different edge order may keep the frontier smaller");
        }
        states = std::move(next);
        if (states.empty()) break;
    }

    Coeffs total{};
    for (auto& [key, coeffs] : states) bump(total, coeffs, 0);
    if (total.empty()) throw InputError("no admissible edge subset: (C) is empty");
    return CountPolynomial(std::move(total));
}

inline CountPolynomial count_by_frontier_dp(const Graph& g, const ConstraintProfile& cp,
                                            std::size_t state_cap = kDefaultDpStateCap) {
    return count_by_frontier_dp(g, cp, choose_edge_order(g), state_cap);
}

} // namespace lyl
