#pragma once

// Exact Ising partition functions on small site sets, their Lee-Yang zeros,
// the finite-volume pressure, and the particle-form second-moment inequality
// T_{m+1}^2 - T_m T_{m+2} <= z e^{beta B} D T_m T_{m+1}.
//
// Conventions (documented choices):
//   * U(sigma) = -sum over listed unordered pairs of J(x,y) sigma(x) sigma(y);
//     the ordered-sum reading doubles every J (flag ordered_sum).
//   * spin -> lattice gas: n_x = (sigma(x)+1)/2; the induced pair potential is
//     phi(x,y) = -4 J(x,y) with single-site energy eps_x = 2 sum_y J(x,y).
//   * particle tuples are hard-core: coinciding sites carry infinite energy,
//     and the x = y coincidence contributes 1 - e^{-beta W_+} = 1 to the
//     second-moment constant, so the inequality runs with D_eff = 1 + D_pair
//     (the ideal gas attains it with equality).

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "lyl/certificates.hpp"
#include "lyl/dd.hpp"
#include "lyl/errors.hpp"
#include "lyl/rational.hpp"
#include "lyl/roots.hpp"
#include "lyl/stats.hpp"

namespace lyl {

struct SpinSystem {
    std::vector<std::string> sites;
    std::vector<std::tuple<int, int, double>> pairs; // (site, site, J), unordered pairs
    double beta = 0.0;
    bool ordered_sum = false; // interpret couplings as the ordered double sum (J doubled)

    int site_index(const std::string& id) const {
        for (std::size_t i = 0; i < sites.size(); ++i)
            if (sites[i] == id) return static_cast<int>(i);
        throw InputError("unknown site id '" + id + "'");
    }
    double coupling_scale() const { return ordered_sum ? 2.0 : 1.0; }
    bool ferromagnetic() const {
        for (const auto& [a, b, J] : pairs)
            if (J < 0.0) return false;
        return true;
    }
};

inline SpinSystem make_chain(int n, double J, double beta, bool periodic = false) {
    if (n < 1) throw InputError("chain needs n >= 1 sites");
    SpinSystem s;
    for (int i = 0; i < n; ++i) s.sites.push_back("s" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) s.pairs.emplace_back(i, i + 1, J);
    if (periodic && n > 2) s.pairs.emplace_back(n - 1, 0, J);
    s.beta = beta;
    return s;
}

inline SpinSystem make_torus(int w, int h, double J, double beta) {
    if (w < 3 || h < 3) throw InputError("torus needs w, h >= 3 (avoids doubled bonds)");
    SpinSystem s;
    auto idx = [&](int x, int y) { return (y % h) * w + (x % w); };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            s.sites.push_back("t" + std::to_string(x) + "_" + std::to_string(y));
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            s.pairs.emplace_back(idx(x, y), idx(x + 1, y), J);
            s.pairs.emplace_back(idx(x, y), idx(x, y + 1), J);
        }
    s.beta = beta;
    return s;
}

// P(beta, z) = sum over spin configurations of z^{#up} e^{-beta U}; exact
// enumeration with fixed-chunk accumulation (deterministic for any worker count).
inline std::vector<dd> partition_polynomial(const SpinSystem& s, int cap_sites = 22) {
    const int n = static_cast<int>(s.sites.size());
    if (n < 1) throw InputError("spin system has no sites");
    if (n > cap_sites)
        throw ResourceError("spin enumeration cap exceeded: " + std::to_string(n) +
                            " sites > cap " + std::to_string(cap_sites));
    const double scale = s.coupling_scale();
    const std::uint64_t total = 1ULL << n;
    const unsigned chunks = 64;
    std::vector<std::vector<dd>> partial(chunks, std::vector<dd>(static_cast<std::size_t>(n) + 1, dd(0.0)));
    auto work = [&](unsigned c) {
        std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            double U = 0.0;
            for (const auto& [a, b, J] : s.pairs) {
                int sa = (mask >> a) & 1ULL ? 1 : -1;
                int sb = (mask >> b) & 1ULL ? 1 : -1;
                U -= scale * J * sa * sb;
            }
            int m = std::popcount(mask);
            partial[c][static_cast<std::size_t>(m)] += dd_exp(dd(-s.beta * U));
        }
    };
    unsigned workers = std::min<unsigned>(
        std::thread::hardware_concurrency() ? std::thread::hardware_concurrency() : 1u, chunks);
    if (n <= 14 || workers <= 1) {
        for (unsigned c = 0; c < chunks; ++c) work(c);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (unsigned c = w; c < chunks; c += workers) work(c);
            });
        for (auto& t : pool) t.join();
    }
    std::vector<dd> coeffs(static_cast<std::size_t>(n) + 1, dd(0.0));
    for (unsigned c = 0; c < chunks; ++c)
        for (std::size_t m = 0; m < coeffs.size(); ++m) coeffs[m] += partial[c][m];
    return coeffs;
}

// Lee-Yang circle certificate: for ferromagnetic pair couplings every zero of
// the partition polynomial lies on |z| = 1. Negative couplings make the
// certificate inapplicable (hypothesis failure, not an error).
inline WedgeCertificate lee_yang_certificate(const SpinSystem& s, const RootSet& rs) {
    WedgeCertificate cert;
    cert.id = "lee_yang_circle";
    cert.R = 1.0;
    if (!s.ferromagnetic()) {
        cert.applicable = false;
        cert.pass = false;
        cert.note = "negative coupling present: Lee-Yang hypothesis fails";
        return cert;
    }
    cert.pass = true;
    for (int j = 0; j < rs.degree(); ++j) {
        const Root& r = rs.roots[static_cast<std::size_t>(j)];
        double tol = r.error_radius + 1e-9;
        double margin = tol - std::fabs(std::abs(r.value) - 1.0);
        cert.margins.push_back({j, margin, tol, true});
        if (margin < 0.0) cert.pass = false;
    }
    return cert;
}

// Pi(beta, z; Lambda) = log P / |Lambda| at real positive z.
inline double finite_pressure(const SpinSystem& s, double z, int cap_sites = 22) {
    if (!(z > 0.0)) throw InputError("pressure needs z > 0");
    std::vector<dd> c = partition_polynomial(s, cap_sites);
    dd p(0.0);
    for (std::size_t i = c.size(); i-- > 0;) p = p * dd(z) + c[i];
    return dd_log(p).to_double() / static_cast<double>(s.sites.size());
}

// Lattice gas with a symmetric pair potential and optional single-site
// energies; the hard core (one particle per site) is built in.
struct ParticleSystem {
    int n = 0;
    std::vector<std::vector<double>> phi; // n x n symmetric, zero diagonal
    std::vector<double> eps;              // single-site energies
    double beta = 1.0;

    static ParticleSystem pair_only(int n, double beta) {
        ParticleSystem ps;
        ps.n = n;
        ps.beta = beta;
        ps.phi.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
        ps.eps.assign(static_cast<std::size_t>(n), 0.0);
        return ps;
    }
    void set_pair(int a, int b, double v) {
        phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
        phi[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
    }
};

// n_x = (sigma(x)+1)/2 turns the spin energy into the lattice-gas form
// phi = -4J, eps_x = 2 sum_y J(x,y) (the constant shift cancels in X).
inline ParticleSystem spin_to_particle(const SpinSystem& s) {
    ParticleSystem ps = ParticleSystem::pair_only(static_cast<int>(s.sites.size()), s.beta);
    const double scale = s.coupling_scale();
    for (const auto& [a, b, J] : s.pairs) {
        ps.phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += -4.0 * scale * J;
        ps.phi[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += -4.0 * scale * J;
        ps.eps[static_cast<std::size_t>(a)] += 2.0 * scale * J;
        ps.eps[static_cast<std::size_t>(b)] += 2.0 * scale * J;
    }
    return ps;
}

// Canonical sums: p_m = sum over m-subsets Y of exp(-beta [sum eps + sum phi]).
inline std::vector<dd> particle_polynomial(const ParticleSystem& ps, int cap_sites = 18) {
    if (ps.n > cap_sites)
        throw ResourceError("particle enumeration cap exceeded: " + std::to_string(ps.n) +
                            " sites > cap " + std::to_string(cap_sites));
    const std::uint64_t total = 1ULL << ps.n;
    std::vector<dd> coeffs(static_cast<std::size_t>(ps.n) + 1, dd(0.0));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double U = 0.0;
        for (int a = 0; a < ps.n; ++a) {
            if (!((mask >> a) & 1ULL)) continue;
            U += ps.eps[static_cast<std::size_t>(a)];
            for (int b = a + 1; b < ps.n; ++b)
                if ((mask >> b) & 1ULL) U += ps.phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }
        coeffs[static_cast<std::size_t>(std::popcount(mask))] += dd_exp(dd(-ps.beta * U));
    }
    return coeffs;
}

// D = sup_y sum_{x != y} (1 - e^{-beta phi_+(x,y)}) and
// -B = inf_x [eps_x + sum_y min(phi(x,y), 0)] (the inner infimum over subsets
// selects exactly the negative terms).
inline std::pair<double, double> second_moment_constants(const ParticleSystem& ps) {
    double D = 0.0;
    double negB = std::numeric_limits<double>::infinity();
    for (int y = 0; y < ps.n; ++y) {
        double sum = 0.0;
        for (int x = 0; x < ps.n; ++x) {
            if (x == y) continue;
            double p = std::max(ps.phi[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], 0.0);
            sum += -std::expm1(-ps.beta * p);
        }
        D = std::max(D, sum);
    }
    for (int x = 0; x < ps.n; ++x) {
        double v = ps.eps[static_cast<std::size_t>(x)];
        for (int y = 0; y < ps.n; ++y)
            if (y != x) v += std::min(ps.phi[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], 0.0);
        negB = std::min(negB, v);
    }
    if (ps.n == 0) negB = 0.0;
    return {D, -negB};
}

struct SecondMomentMargin {
    int m;
    double lhs; // T_{m+1}^2 - T_m T_{m+2}
    double rhs; // z e^{beta B} D_eff T_m T_{m+1}
};

struct SecondMomentReport {
    double D_pair = 0.0;
    double D_eff = 0.0; // 1 + D_pair; the hard core contributes the x = y term
    double B = 0.0;
    std::vector<SecondMomentMargin> margins;
    bool holds = false;
    double worst_violation = 0.0; // max over m of (lhs - rhs), scale-relative
};

inline SecondMomentReport second_moment_inequality(const ParticleSystem& ps, const BigRational& z0,
                                             int cap_sites = 18) {
    if (z0.sign() <= 0) throw InputError("fugacity must be positive");
    SecondMomentReport rep;
    auto [D, B] = second_moment_constants(ps);
    rep.D_pair = D;
    rep.D_eff = 1.0 + D;
    rep.B = B;
    std::vector<dd> p = particle_polynomial(ps, cap_sites);
    const int N = static_cast<int>(p.size()) - 1;
    dd z = z0.to_dd();
    // T_m = m! p_m z^m / P(z) = m! Pr{X=m}
    std::vector<dd> t(p.size());
    dd zp(1.0), fact(1.0), P(0.0);
    for (int m = 0; m <= N; ++m) {
        if (m > 0) fact *= dd(static_cast<double>(m));
        t[static_cast<std::size_t>(m)] = p[static_cast<std::size_t>(m)] * zp * fact;
        P += p[static_cast<std::size_t>(m)] * zp;
        zp *= z;
    }
    for (auto& x : t) x /= P;
    dd coef = z * dd_exp(dd(ps.beta * B)) * dd(rep.D_eff);
    rep.holds = true;
    rep.worst_violation = -std::numeric_limits<double>::infinity();
    for (int m = 0; m + 2 <= N; ++m) {
        dd lhs = t[static_cast<std::size_t>(m + 1)] * t[static_cast<std::size_t>(m + 1)] -
                 t[static_cast<std::size_t>(m)] * t[static_cast<std::size_t>(m + 2)];
        dd rhs = coef * t[static_cast<std::size_t>(m)] * t[static_cast<std::size_t>(m + 1)];
        rep.margins.push_back({m, lhs.to_double(), rhs.to_double()});
        double scale = std::max(std::fabs(rhs.to_double()), std::fabs(lhs.to_double())) + 1e-300;
        double viol = (lhs - rhs).to_double() / scale;
        rep.worst_violation = std::max(rep.worst_violation, viol);
        if (viol > 1e-20) rep.holds = false;
    }
    return rep;
}

} // namespace lyl
