#pragma once

// Ginibre's variance inequality and its graph-counting hypothesis:
// with T_m = m! Pr{X=m}, the ratio condition T_{m+2}/T_{m+1} >= T_{m+1}/T_m - A
// implies Var(X) >= E[X]/(1+A). All margins are exact rationals. For down-set
// profiles C(v) = {0..k_v}, A = (2 alpha + 1) z0 with alpha = max_v [d_v - k_v]_+,
// and the combinatorial identities behind it are verified by enumeration.

#include <bit>
#include <string>
#include <vector>

#include "lyl/bigint.hpp"
#include "lyl/count.hpp"
#include "lyl/errors.hpp"
#include "lyl/graph.hpp"
#include "lyl/rational.hpp"
#include "lyl/stats.hpp"

namespace lyl {

struct GinibreMargin {
    int m;
    bool defined;      // false when T_m or T_{m+1} vanishes (ratio undefined; skipped)
    BigRational margin; // T_{m+2}/T_{m+1} - T_{m+1}/T_m + A, exact
};

struct GinibreReport {
    BigRational A;
    std::vector<GinibreMargin> margins;
    int skipped = 0;
    bool hypothesis_holds = false; // every defined margin >= 0
    BigRational conclusion_margin; // Var - E/(1+A), exact
    bool conclusion_holds = false;
    bool sound = true; // hypothesis (with no skipped indices) forces the conclusion
};

// T_{m+1}/T_m = (m+1) p_{m+1} z0 / p_m, so the margin at m is
// z0 [ (m+2) p_{m+2}/p_{m+1} - (m+1) p_{m+1}/p_m ] + A.
inline GinibreReport ginibre_hypothesis(const FugacityModel& fm, const BigRational& A) {
    if (A <= BigRational(-1)) throw InputError("ginibre check requires A > -1");
    GinibreReport rep;
    rep.A = A;
    const int N = fm.poly.degree();
    for (int m = 0; m + 2 <= N; ++m) {
        const BigInt& pm = fm.poly.coeff(m);
        const BigInt& pm1 = fm.poly.coeff(m + 1);
        const BigInt& pm2 = fm.poly.coeff(m + 2);
        if (pm.is_zero() || pm1.is_zero()) {
            rep.margins.push_back({m, false, BigRational(0)});
            ++rep.skipped;
            continue;
        }
        BigRational up = BigRational(BigInt(m + 2) * pm2, pm1) * fm.z0;
        BigRational down = BigRational(BigInt(m + 1) * pm1, pm) * fm.z0;
        rep.margins.push_back({m, true, up - down + A});
    }
    rep.hypothesis_holds = true;
    for (const auto& g : rep.margins)
        if (g.defined && g.margin.sign() < 0) rep.hypothesis_holds = false;

    // exact moments: E = S1/S, Var = (S2 S - S1^2)/S^2 with t_m = p_m z0^m
    BigRational S(0), S1(0), S2(0), zp(1);
    for (int m = 0; m <= N; ++m) {
        BigRational t = BigRational(fm.poly.coeff(m)) * zp;
        S += t;
        S1 += t * BigRational(m);
        S2 += t * BigRational(m) * BigRational(m);
        zp *= fm.z0;
    }
    BigRational mean = S1 / S;
    BigRational var = S2 / S - mean * mean;
    rep.conclusion_margin = var - mean / (BigRational(1) + A);
    rep.conclusion_holds = rep.conclusion_margin.sign() >= 0;
    rep.sound = !(rep.hypothesis_holds && rep.skipped == 0) || rep.conclusion_holds;
    return rep;
}

// A = (2 alpha + 1) z0 with alpha = max_v [d_v - k_v]_+, for down-set
// profiles C(v) = {0,1,...,k_v}, k_v >= 1.
inline BigRational graph_ginibre_A(const Graph& g, const ConstraintProfile& cp,
                                   const BigRational& z0) {
    if (!cp.is_down_set())
        throw InputError("ginibre A formula needs down-set profiles C(v) = {0..k_v}");
    int alpha = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int kv = cp.max_allowed(v);
        if (kv < 1)
            throw InputError("ginibre A formula needs k_v >= 1 at vertex '" + g.vertex_id(v) + "'");
        alpha = std::max(alpha, g.degree(v) - kv);
    }
    return BigRational(2 * alpha + 1) * z0;
}

struct ExtensionCountReport {
    int m;
    BigInt p_m, p_m1, p_m2;     // admissible-subset counts at sizes m, m+1, m+2
    BigInt k1_sum, k2_sum;      // sum over M in M_m of K_1(M), K_2(M)
    bool identity1 = false;     // (m+1) p_{m+1} == sum K_1
    bool identity2 = false;     // (m+2)(m+1) p_{m+2} == 2 sum K_2
    bool eq_second_moment = false; // 2 E[K2] - E[K1]^2 >= -(2 alpha + 1) E[K1], exact
    bool expectations_defined = false;
};

// Enumerates M_m and counts the one- and two-edge admissible extensions of
// each subgraph; down-set profiles only (deleting an edge from an admissible
// subgraph must stay admissible).
inline ExtensionCountReport extension_count_identities(const Graph& g, const ConstraintProfile& cp, int m,
                                        int cap_edges = kDefaultEnumerationCap) {
    if (!cp.is_down_set())
        throw InputError("extension-count identities need down-set profiles");
    const int E = g.num_edges();
    if (E > cap_edges)
        throw ResourceError("enumeration cap exceeded: |E| = " + std::to_string(E) +
                            " > cap " + std::to_string(cap_edges));
    if (m < 0 || m > E) throw InputError("subset size out of range");

    int alpha = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        alpha = std::max(alpha, g.degree(v) - cp.max_allowed(v));

    unsigned long long pm = 0, pm1 = 0, pm2 = 0, k1 = 0, k2 = 0;
    const std::uint64_t total = 1ULL << E;
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()));
    auto admissible_mask = [&](std::uint64_t mask) {
        std::fill(deg.begin(), deg.end(), 0);
        for (std::uint64_t t = mask; t;) {
            int e = std::countr_zero(t);
            t &= t - 1;
            auto [a, b] = g.edge(e);
            deg[static_cast<std::size_t>(a)]++;
            deg[static_cast<std::size_t>(b)]++;
        }
        for (int v = 0; v < g.num_vertices(); ++v)
            if (!cp.contains(v, deg[static_cast<std::size_t>(v)])) return false;
        return true;
    };
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        int sz = std::popcount(mask);
        if (sz < m || sz > m + 2) continue;
        if (!admissible_mask(mask)) continue;
        if (sz == m + 1) { ++pm1; continue; }
        if (sz == m + 2) { ++pm2; continue; }
        ++pm;
        // extensions of this M
        for (int e1 = 0; e1 < E; ++e1) {
            if (mask & (1ULL << e1)) continue;
            if (!admissible_mask(mask | (1ULL << e1))) continue;
            ++k1;
            for (int e2 = e1 + 1; e2 < E; ++e2) {
                if (mask & (1ULL << e2)) continue;
                if (admissible_mask(mask | (1ULL << e1) | (1ULL << e2))) ++k2;
            }
        }
    }
    // k2 counted pairs {e1,e2} with e1 < e2 where both singles are admissible;
    // pairs whose first edge alone is inadmissible cannot extend admissibly
    // under a down-set profile, so the count is complete.
    ExtensionCountReport rep;
    rep.m = m;
    rep.p_m = BigInt(pm);
    rep.p_m1 = BigInt(pm1);
    rep.p_m2 = BigInt(pm2);
    rep.k1_sum = BigInt(k1);
    rep.k2_sum = BigInt(k2);
    rep.identity1 = (BigInt(m + 1) * rep.p_m1 == rep.k1_sum);
    rep.identity2 = (BigInt(m + 2) * BigInt(m + 1) * rep.p_m2 == BigInt(2) * rep.k2_sum);
    if (pm > 0) {
        rep.expectations_defined = true;
        // 2 E[K2] - E[K1]^2 + (2 alpha + 1) E[K1] >= 0, scaled by p_m^2
        BigInt lhs = BigInt(2) * rep.k2_sum * rep.p_m - rep.k1_sum * rep.k1_sum +
                     BigInt(2 * alpha + 1) * rep.k1_sum * rep.p_m;
        rep.eq_second_moment = !lhs.is_negative();
    }
    return rep;
}

} // namespace lyl
