#pragma once

// Certificates checking computed roots against the root-location theorems:
// modulus floor R = min_e r_{v1(e)} r_{v2(e)}, the uniform wedge
// [pi - 2 phi, pi], the bipartite wedge [pi - phi_1 - phi_2, pi], the
// left-half-plane test, and the reproduction of the printed bipartite
// angle table. Per-root angular tolerance is asin(err/|zeta|); roots with
// |zeta| below their error radius are excluded from wedge checks and flagged.

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "lyl/errors.hpp"
#include "lyl/graph.hpp"
#include "lyl/roots.hpp"

namespace lyl {

struct VertexBound {
    double r;   // min root modulus of p_v (0 when 0 is a root, i.e. 0 not in C(v))
    double phi; // wedge half-angle: pi - min |arg| over nonzero roots, 0 if all negative real
};

inline VertexBound vertex_root_bound(const std::vector<int>& C, int d) {
    CountPolynomial p = vertex_polynomial(C, d);
    if (p.degree() < 1) return {0.0, 0.0}; // constant polynomial: no roots
    RootSet rs = find_roots(p);
    VertexBound out{0.0, 0.0};
    bool first = true;
    for (const auto& r : rs.roots) {
        double mod = std::abs(r.value);
        if (first || mod < out.r) out.r = mod;
        first = false;
        if (mod > 0.0) {
            double phi = M_PI - std::fabs(std::atan2(r.value.imag(), r.value.real()));
            out.phi = std::max(out.phi, phi);
        }
    }
    return out;
}

inline std::vector<VertexBound> vertex_root_bounds(const Graph& g, const ConstraintProfile& cp) {
    std::vector<VertexBound> out;
    out.reserve(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v)
        out.push_back(vertex_root_bound(cp.allowed(v), g.degree(v)));
    return out;
}

struct RootMargin {
    int index;
    double margin;   // distance into the allowed region; negative = violation
    double tol;      // per-root tolerance the verdict uses
    bool checked;    // false: excluded (|zeta| within error radius of 0) and flagged
};

struct WedgeCertificate {
    std::string id;
    double phi = 0.0; // claimed wedge half-angle (wedge certificates)
    double R = 0.0;   // modulus floor (modulus / circle certificates)
    std::vector<RootMargin> margins;
    bool pass = false;
    bool applicable = true;
    std::string note;
};

inline WedgeCertificate modulus_certificate(const Graph& g, const ConstraintProfile& cp,
                                            const RootSet& rs) {
    if (!cp.zero_allowed_everywhere())
        throw InputError("modulus certificate requires 0 in C(v) for every vertex");
    std::vector<VertexBound> vb = vertex_root_bounds(g, cp);
    double R = 0.0;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        double prod = vb[static_cast<std::size_t>(u)].r * vb[static_cast<std::size_t>(v)].r;
        R = (e == 0) ? prod : std::min(R, prod);
    }
    WedgeCertificate cert;
    cert.id = "modulus_floor";
    cert.R = R;
    cert.pass = true;
    for (int j = 0; j < rs.degree(); ++j) {
        const Root& r = rs.roots[static_cast<std::size_t>(j)];
        double tol = r.error_radius + 1e-9;
        double margin = std::abs(r.value) - R;
        cert.margins.push_back({j, margin, tol, true});
        if (margin < -tol) cert.pass = false;
    }
    return cert;
}

namespace cert_detail {
inline WedgeCertificate wedge_check(const RootSet& rs, double wedge_lo, double phi,
                                    const std::string& id) {
    WedgeCertificate cert;
    cert.id = id;
    cert.phi = phi;
    cert.pass = true;
    for (int j = 0; j < rs.degree(); ++j) {
        const Root& r = rs.roots[static_cast<std::size_t>(j)];
        double mod = std::abs(r.value);
        if (mod <= r.error_radius) {
            cert.margins.push_back({j, 0.0, 0.0, false}); // arg ill-conditioned near 0
            continue;
        }
        double atol = std::asin(std::min(1.0, r.error_radius / mod)) + 1e-9;
        double margin = std::fabs(std::atan2(r.value.imag(), r.value.real())) - wedge_lo;
        cert.margins.push_back({j, margin, atol, true});
        if (margin < -atol) cert.pass = false;
    }
    return cert;
}
} // namespace cert_detail

// Cor 4.3(a): with phi = max_v phi_v <= pi/2, every nonzero root has
// |arg| in [pi - 2 phi, pi].
inline WedgeCertificate wedge_certificate_uniform(const Graph& g, const ConstraintProfile& cp,
                                                  const RootSet& rs) {
    std::vector<VertexBound> vb = vertex_root_bounds(g, cp);
    double phi = 0.0;
    for (const auto& b : vb) phi = std::max(phi, b.phi);
    if (phi > M_PI / 2 + 1e-12)
        throw InputError("uniform wedge certificate needs max vertex wedge <= pi/2");
    return cert_detail::wedge_check(rs, M_PI - 2.0 * phi, phi, "wedge_uniform");
}

// Cor 4.3(b): bipartite with per-side angles phi_1, phi_2 <= pi/2 gives
// |arg| in [pi - phi_1 - phi_2, pi].
inline WedgeCertificate wedge_certificate_bipartite(const Graph& g, const ConstraintProfile& cp,
                                                    const std::set<int>& side1, const RootSet& rs) {
    if (!g.is_valid_bipartition(side1))
        throw InputError("provided vertex set is not a valid bipartition");
    std::vector<VertexBound> vb = vertex_root_bounds(g, cp);
    double phi1 = 0.0, phi2 = 0.0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        double p = vb[static_cast<std::size_t>(v)].phi;
        if (side1.count(v)) phi1 = std::max(phi1, p);
        else phi2 = std::max(phi2, p);
    }
    if (phi1 > M_PI / 2 + 1e-12 || phi2 > M_PI / 2 + 1e-12)
        throw InputError("bipartite wedge certificate needs per-side wedges <= pi/2");
    WedgeCertificate cert =
        cert_detail::wedge_check(rs, M_PI - phi1 - phi2, std::max(phi1, phi2), "wedge_bipartite");
    cert.note = "phi1=" + std::to_string(phi1) + " phi2=" + std::to_string(phi2);
    return cert;
}

struct LhpResult {
    bool pass;
    double margin; // max_j Re(zeta_j); <= tolerance when pass
};

inline LhpResult left_half_plane_check(const RootSet& rs) {
    LhpResult out{true, -1e300};
    for (const auto& r : rs.roots) {
        out.margin = std::max(out.margin, r.value.real());
        if (r.value.real() > r.error_radius + 1e-12) out.pass = false;
    }
    return out;
}

struct AngleTableRow {
    int d1;
    int k2;
    int d2;
    double phi1; // wedge for side 1, C = {0,1,2}, degrees up to d1
    double phi2; // wedge printed for the table cell (degrees up to the cell max)
    bool sum_below_half_pi;
};

// Recomputes the printed bipartite-angle table: side 1 carries C = {0,1,2}
// with degree at most d1, side 2 carries C = {0,...,k2}. The printed phi2 of
// a cell covers every admissible d2 of that cell, so rows of the same cell
// share it (the k2=3 cell of d1=3 allows d2 in {5,6,7}).
inline std::vector<AngleTableRow> bipartite_angle_table() {
    auto max_phi = [](const std::vector<int>& C, int dmax) {
        double phi = 0.0;
        for (int d = 1; d <= dmax; ++d) phi = std::max(phi, vertex_root_bound(C, d).phi);
        return phi;
    };
    const std::vector<int> C2{0, 1, 2}, C3{0, 1, 2, 3}, C4{0, 1, 2, 3, 4};
    double phi1_3 = max_phi(C2, 3), phi1_4 = max_phi(C2, 4);
    double phi2_k3_cell7 = max_phi(C3, 7); // d1=3 cell: d2 in {5,6,7}
    double phi2_k3_cell5 = max_phi(C3, 5); // d1=4 cell: d2 = 5
    double phi2_k4_cell5 = max_phi(C4, 5); // d1=3, k2=4 cell: d2 = 5
    std::vector<AngleTableRow> rows = {
        {3, 3, 5, phi1_3, phi2_k3_cell7, false},
        {3, 3, 6, phi1_3, phi2_k3_cell7, false},
        {3, 3, 7, phi1_3, phi2_k3_cell7, false},
        {3, 4, 5, phi1_3, phi2_k4_cell5, false},
        {4, 3, 5, phi1_4, phi2_k3_cell5, false},
    };
    for (auto& r : rows) r.sum_below_half_pi = (r.phi1 + r.phi2 < M_PI / 2);
    return rows;
}

} // namespace lyl
