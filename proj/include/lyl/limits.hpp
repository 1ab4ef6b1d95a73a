#pragma once

// Every explicit CLT / LCLT bound, with its constants and hypothesis gates:
//   * the zero-free-disc CLT (constants N0, K, K*, B1, B2 from delta),
//   * the left-half-plane Berry-Esseen bound 12/sqrt(Var),
//   * the Harper decomposition into {0,1}- and {0,1,2}-valued factors,
//   * log-concavity flags and the quantified log-concave LCLT gates,
//   * the general LCLT bound driven by W, and its sharp 25/(pi Var) regime,
//   * the mean lower bound E[X] >= M N and the MGF remainder check.
// Reports never assert an inapplicable theorem; "sound" records that an
// applicable bound dominated the exactly measured error.

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "lyl/certificates.hpp"
#include "lyl/errors.hpp"
#include "lyl/graph.hpp"
#include "lyl/poly.hpp"
#include "lyl/prng.hpp"
#include "lyl/roots.hpp"
#include "lyl/stats.hpp"

namespace lyl {

struct HypothesisCheck {
    std::string name;
    bool satisfied;
    double margin; // how far into the allowed region (negative = failed)
};

struct CltBoundReport {
    std::string theorem;
    std::vector<HypothesisCheck> hypotheses;
    bool applicable = false;
    bool lower_bound = false; // true: bound is a lower bound on `measured`
    double bound = std::numeric_limits<double>::infinity();
    double measured = std::numeric_limits<double>::quiet_NaN();
    bool vacuous = false; // bound exceeds any probability (or is infinite)
    bool sound = true;    // applicable => measured on the right side of bound
    std::map<std::string, double> values;
    std::string note;

    void finish() {
        applicable = true;
        for (const auto& h : hypotheses) applicable = applicable && h.satisfied;
        if (!lower_bound) vacuous = !(bound <= 1.0);
        if (applicable && std::isfinite(measured)) {
            sound = lower_bound ? (measured >= bound - 1e-12)
                                : (measured <= bound + 1e-12);
        } else {
            sound = true;
        }
    }
};

namespace limits_detail {

struct DiscConstants {
    double delta, eps, K, Kstar, B1, B2, N0;
};

// delta = min(z0, min_j |z0 - zeta_j| - err_j); constants of the zero-free-disc
// CLT, with K* read over complex u: K* = (e^K - 1)/K.
inline DiscConstants disc_constants(const FugacityModel& fm, const RootSet& rs) {
    double z0 = fm.z0.to_double();
    double delta = z0;
    for (const auto& r : rs.roots)
        delta = std::min(delta, std::abs(std::complex<double>(z0, 0.0) - r.value) - r.error_radius);
    DiscConstants c{};
    c.delta = delta;
    if (!(delta > 0.0)) {
        c.eps = 0.0;
        c.K = c.Kstar = c.B1 = c.B2 = c.N0 = std::numeric_limits<double>::infinity();
        return c;
    }
    c.eps = std::log1p(std::min(delta / 2.0, z0) / z0);
    double e3 = c.eps * c.eps * c.eps;
    c.K = 2.0 * std::log(2.0) / e3;
    c.Kstar = (c.K > 700.0) ? std::numeric_limits<double>::infinity()
                            : std::expm1(c.K) / c.K;
    c.B1 = std::sqrt(2.0 / M_PI) * c.K * c.Kstar;
    c.B2 = 24.0 / (M_PI * std::sqrt(2.0 * M_PI));
    c.N0 = 8.0 / e3;
    return c;
}

} // namespace limits_detail

// Zero-free-disc CLT: bound B1 N / Var^{3/2} + B2 N^{1/3} / Var^{1/2} once
// N >= N0 = 8/eps^3.
inline CltBoundReport is_clt_bound(const FugacityModel& fm, const RootSet& rs) {
    CltBoundReport rep;
    rep.theorem = "clt_zero_free_disc";
    auto c = limits_detail::disc_constants(fm, rs);
    DistributionTable dt = distribution(fm);
    double N = fm.poly.degree();
    double var = dt.variance.to_double();
    rep.hypotheses.push_back({"zero_free_disc_delta_positive", c.delta > 0.0, c.delta});
    rep.hypotheses.push_back({"degree_at_least_N0", c.delta > 0.0 && N >= c.N0,
                              c.delta > 0.0 ? N - c.N0 : -std::numeric_limits<double>::infinity()});
    rep.values = {{"delta", c.delta}, {"eps", c.eps},   {"K", c.K},   {"K_star", c.Kstar},
                  {"B1", c.B1},       {"B2", c.B2},     {"N0", c.N0}, {"variance", var}};
    if (c.delta > 0.0 && var > 0.0) {
        rep.bound = c.B1 * N / std::pow(var, 1.5) + c.B2 * std::cbrt(N) / std::sqrt(var);
        rep.measured = cdf_vs_gaussian_sup(dt);
    }
    rep.finish();
    return rep;
}

// Berry-Esseen at z0 = 1 under the left-half-plane hypothesis: 12/sqrt(Var).
inline CltBoundReport berry_esseen_bound(const FugacityModel& fm, const RootSet& rs) {
    if (!fm.unit_fugacity())
        throw InputError("berry_esseen_bound is stated at z0 = 1; rescale first");
    CltBoundReport rep;
    rep.theorem = "berry_esseen_lhp";
    LhpResult lhp = left_half_plane_check(rs);
    rep.hypotheses.push_back({"roots_in_left_half_plane", lhp.pass, -lhp.margin});
    rep.hypotheses.push_back({"p0_positive", !fm.poly.coeff(0).is_zero(),
                              fm.poly.coeff(0).is_zero() ? -1.0 : 1.0});
    DistributionTable dt = distribution(fm);
    double var = dt.variance.to_double();
    rep.values["variance"] = var;
    if (var > 0.0) {
        rep.bound = 12.0 / std::sqrt(var);
        rep.measured = cdf_vs_gaussian_sup(dt);
    }
    rep.finish();
    return rep;
}

// One independent factor of the Harper decomposition. Probabilities are the
// coefficients of P_j(z)/P_j(1), so E[z^{X_j}] = P_j(z)/P_j(1) by construction.
struct HarperFactor {
    bool quadratic;             // false: {0,1}-valued, true: {0,1,2}-valued
    std::complex<double> eta;   // real >= 0 (linear) or Im > 0 (quadratic)
    std::vector<double> probs;  // outcome probabilities, ascending outcome
};

inline std::vector<HarperFactor> harper_decomposition(const RootSet& rs,
                                                      const FugacityModel& fm,
                                                      double tol = 1e-9) {
    if (!fm.unit_fugacity())
        throw InputError("harper decomposition is defined at z0 = 1; rescale first");
    RootClassification cl = classify_roots(rs, tol);
    std::vector<HarperFactor> out;
    for (int j : cl.j1) {
        double eta = std::max(0.0, -rs.roots[static_cast<std::size_t>(j)].value.real());
        double pj1 = 1.0 + eta;
        out.push_back({false, {eta, 0.0}, {eta / pj1, 1.0 / pj1}});
    }
    for (int j : cl.j2) {
        std::complex<double> eta = rs.eta(j);
        double re = std::max(0.0, eta.real());
        eta = {re, eta.imag()};
        double a2 = std::norm(eta);
        double pj1 = 1.0 + 2.0 * re + a2;
        HarperFactor f{true, eta, {a2 / pj1, 2.0 * re / pj1, 1.0 / pj1}};
        for (double p : f.probs)
            if (p < 0.0) throw InputError("harper factor with negative probability");
        out.push_back(f);
    }
    return out;
}

inline std::vector<dd> harper_convolution(const std::vector<HarperFactor>& factors) {
    std::vector<dd> acc{dd(1.0)};
    for (const auto& f : factors) {
        std::vector<dd> next(acc.size() + f.probs.size() - 1, dd(0.0));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t k = 0; k < f.probs.size(); ++k)
                next[i + k] += acc[i] * dd(f.probs[k]);
        acc = std::move(next);
    }
    return acc;
}

// n seeded draws of sum_j X_j.
inline std::vector<int> sample_X(const std::vector<HarperFactor>& factors, std::size_t n,
                                 std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        int s = 0;
        for (const auto& f : factors) {
            double u = rng.next_real();
            double acc = 0.0;
            int value = static_cast<int>(f.probs.size()) - 1;
            for (std::size_t k = 0; k < f.probs.size(); ++k) {
                acc += f.probs[k];
                if (u < acc) { value = static_cast<int>(k); break; }
            }
            s += value;
        }
        out.push_back(s);
    }
    return out;
}

struct LogConcavity {
    bool log_concave;
    bool properly; // no internal zeros and strict inequality off the zero set
};

inline LogConcavity log_concavity_check(const CountPolynomial& p) {
    const int N = p.degree();
    bool lc = true, strict = true;
    int first = -1, last = -1;
    for (int n = 0; n <= N; ++n) {
        if (!p.coeff(n).is_zero()) {
            if (first < 0) first = n;
            last = n;
        }
    }
    bool no_internal_zero = true;
    for (int n = first; n <= last; ++n)
        if (p.coeff(n).is_zero()) no_internal_zero = false;
    for (int n = 1; n <= N; ++n) {
        BigInt lhs = p.coeff(n) * p.coeff(n);
        BigInt rhs = p.coeff(n - 1) * p.coeff(n + 1);
        if (lhs < rhs) lc = false;
        if (p.coeff(n).is_zero()) {
            if (!rhs.is_zero()) strict = false; // equality must hold at zeros
        } else if (lhs == rhs) {
            strict = false;
        }
    }
    return {lc, lc && no_internal_zero && strict};
}

// Quantified log-concave LCLT: with K = 12 from the Berry-Esseen bound the
// gates are K > 7, K/sqrt(Var) < 1e-7, K/Var^{1/4} < 1e-2 and proper
// log-concavity; the bound is (14.5 K + 4.87)/Var^{3/4}. The companion
// variance gate Var > 144e7 with its rounded bound 180/Var^{3/4} is recorded
// alongside.
inline CltBoundReport canfield_bound(const DistributionTable& dt, bool properly_log_concave) {
    CltBoundReport rep;
    rep.theorem = "log_concave_lclt";
    const double K = 12.0;
    double var = dt.variance.to_double();
    rep.hypotheses.push_back({"properly_log_concave", properly_log_concave,
                              properly_log_concave ? 1.0 : -1.0});
    rep.hypotheses.push_back({"K_gt_7", K > 7.0, K - 7.0});
    rep.hypotheses.push_back({"K_over_sqrt_var", var > 0.0 && K / std::sqrt(var) < 1e-7,
                              1e-7 - (var > 0.0 ? K / std::sqrt(var) : 1e300)});
    rep.hypotheses.push_back({"K_over_var_quarter", var > 0.0 && K / std::pow(var, 0.25) < 1e-2,
                              1e-2 - (var > 0.0 ? K / std::pow(var, 0.25) : 1e300)});
    double c = 14.5 * K + 4.87; // = 178.87 <= 180
    rep.values = {{"K", K},
                  {"c", c},
                  {"variance", var},
                  {"cor_variance_gate", var - 144e7},
                  {"cor_bound_180", var > 0.0 ? 180.0 / std::pow(var, 0.75) : 1e300}};
    if (var > 0.0) {
        rep.bound = c / std::pow(var, 0.75);
        rep.measured = lclt_sup_error(dt);
    }
    rep.finish();
    return rep;
}

// General LCLT: (pi/4^{2/3}) (Var^{1/3}/W) exp(-(4^{1/3}/pi^2) W/Var^{2/3})
// + 24/(pi Var), under Var >= 1, left-half-plane roots, p_0 > 0, z0 = 1.
// W = 0 makes the first term infinite: reported vacuous-but-sound.
inline CltBoundReport lclt_general_bound(const FugacityModel& fm, const RootSet& rs) {
    if (!fm.unit_fugacity())
        throw InputError("lclt_general_bound is stated at z0 = 1; rescale first");
    CltBoundReport rep;
    rep.theorem = "lclt_general";
    LhpResult lhp = left_half_plane_check(rs);
    DistributionTable dt = distribution(fm);
    double var = dt.variance.to_double();
    rep.hypotheses.push_back({"variance_at_least_1", var >= 1.0, var - 1.0});
    rep.hypotheses.push_back({"roots_in_left_half_plane", lhp.pass, -lhp.margin});
    rep.hypotheses.push_back({"p0_positive", !fm.poly.coeff(0).is_zero(),
                              fm.poly.coeff(0).is_zero() ? -1.0 : 1.0});
    if (lhp.pass && !fm.poly.coeff(0).is_zero() && var > 0.0) {
        VarianceSurrogates vs = variance_surrogates(rs, fm);
        double W = vs.W;
        rep.values = {{"W", W}, {"variance", var}};
        double term1 = (W > 0.0)
                           ? (M_PI / std::pow(4.0, 2.0 / 3.0)) * (std::cbrt(var) / W) *
                                 std::exp(-(std::cbrt(4.0) / (M_PI * M_PI)) * W / std::pow(var, 2.0 / 3.0))
                           : std::numeric_limits<double>::infinity();
        rep.bound = term1 + 24.0 / (M_PI * var);
        rep.measured = lclt_sup_error(dt);
    }
    rep.finish();
    return rep;
}

struct GraphContext {
    int num_edges;
    int num_vertices;
    int d_max;            // at least 2 by convention
    bool all_matching;    // C(v) = {0,1} everywhere
    bool all_unbranched;  // C(v) a subset of {0,1,2}, down-set
};

inline GraphContext graph_context(const Graph& g, const ConstraintProfile& cp) {
    GraphContext ctx{g.num_edges(), g.num_vertices(), std::max(2, g.max_degree()), true, true};
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& a = cp.allowed(v);
        if (!(a.size() <= 2 && a.front() == 0 && (a.size() == 1 || a.back() == 1)))
            ctx.all_matching = false;
        bool down12 = a.front() == 0;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != static_cast<int>(k) || a[k] > 2) down12 = false;
        if (!down12) ctx.all_unbranched = false;
    }
    return ctx;
}

// Gate for the sharp 25/(pi Var) LCLT: W >= (pi^2/(3 2^{1/3})) Var^{2/3} ln Var.
// Also evaluates the p1/p0 sufficient condition and, with graph context, the
// matching / unbranched large-graph gates with their closed-form bounds.
inline CltBoundReport lclt_sharp_gate(const FugacityModel& fm, const RootSet& rs,
                                              const GraphContext* ctx = nullptr) {
    if (!fm.unit_fugacity())
        throw InputError("the sharp LCLT gate is stated at z0 = 1; rescale first");
    CltBoundReport rep;
    rep.theorem = "lclt_sharp_gate";
    LhpResult lhp = left_half_plane_check(rs);
    DistributionTable dt = distribution(fm);
    double var = dt.variance.to_double();
    rep.hypotheses.push_back({"variance_at_least_1", var >= 1.0, var - 1.0});
    rep.hypotheses.push_back({"roots_in_left_half_plane", lhp.pass, -lhp.margin});
    rep.hypotheses.push_back({"p0_positive", !fm.poly.coeff(0).is_zero(),
                              fm.poly.coeff(0).is_zero() ? -1.0 : 1.0});
    const double cgate = M_PI * M_PI / (3.0 * std::cbrt(2.0));
    if (lhp.pass && !fm.poly.coeff(0).is_zero() && var >= 1.0) {
        VarianceSurrogates vs = variance_surrogates(rs, fm);
        double gate_rhs = cgate * std::pow(var, 2.0 / 3.0) * std::log(var);
        rep.hypotheses.push_back({"W_gate", vs.W >= gate_rhs, vs.W - gate_rhs});
        rep.values["W"] = vs.W;
        rep.values["W_gate_rhs"] = gate_rhs;
        // sufficient condition (p1/p0) min{1, Delta} >= (8 pi^2/(3 2^{1/3})) N^{2/3} ln N
        double N = fm.poly.degree();
        double suff_lhs = vs.f * std::min(1.0, vs.Delta);
        double suff_rhs = 8.0 * cgate * std::pow(N, 2.0 / 3.0) * std::log(N);
        rep.values["sufficient_lhs"] = suff_lhs;
        rep.values["sufficient_rhs"] = suff_rhs;
        rep.values["sufficient_holds"] = suff_lhs >= suff_rhs ? 1.0 : 0.0;
        if (vs.W >= gate_rhs) {
            rep.bound = 25.0 / (M_PI * var);
            rep.measured = lclt_sup_error(dt);
        }
    } else {
        rep.hypotheses.push_back({"W_gate", false, -1.0});
    }
    if (ctx) {
        double d = ctx->d_max, E = ctx->num_edges, V = ctx->num_vertices;
        if (ctx->all_matching) {
            double gate = 2.2e8 * d * d * d * d;
            rep.values["matching_gate_lhs"] = E;
            rep.values["matching_gate_rhs"] = gate;
            rep.values["matching_gate_margin"] = E - gate;
            rep.values["matching_bound"] = 200.0 * d * d * d * d / (M_PI * E);
        }
        if (ctx->all_unbranched) {
            double lg = std::log(V);
            double gate = 150.0 * std::pow(d, 15.0) * lg * lg * lg;
            rep.values["unbranched_gate_lhs"] = E;
            rep.values["unbranched_gate_rhs"] = gate;
            rep.values["unbranched_gate_margin"] = E - gate;
            rep.values["unbranched_bound"] = 50.0 * std::pow(d, 5.0) / (M_PI * E);
        }
    }
    rep.finish();
    return rep;
}

// E[X] >= M N with M = min{z0, z*} c1 / 2, c1 = p1/(p0 N),
// z* = min{delta1/4, c1 delta1^2/(80 ln 2)}, delta1 = min_j (|zeta_j| - err_j).
inline CltBoundReport mean_lower_bound_certificate(const FugacityModel& fm, const RootSet& rs) {
    CltBoundReport rep;
    rep.theorem = "mean_lower_bound";
    rep.lower_bound = true;
    bool p0 = !fm.poly.coeff(0).is_zero(), p1 = !fm.poly.coeff(1).is_zero();
    rep.hypotheses.push_back({"p0_positive", p0, p0 ? 1.0 : -1.0});
    rep.hypotheses.push_back({"p1_positive", p1, p1 ? 1.0 : -1.0});
    double delta1 = std::numeric_limits<double>::infinity();
    for (const auto& r : rs.roots)
        delta1 = std::min(delta1, std::abs(r.value) - r.error_radius);
    rep.hypotheses.push_back({"roots_away_from_zero", delta1 > 0.0, delta1});
    if (p0 && p1 && delta1 > 0.0) {
        double N = fm.poly.degree();
        double c1 = (dd_from_bigint(fm.poly.coeff(1)) / dd_from_bigint(fm.poly.coeff(0))).to_double() / N;
        double zstar = std::min(delta1 / 4.0, c1 * delta1 * delta1 / (80.0 * std::log(2.0)));
        double z0 = fm.z0.to_double();
        double M = std::min(z0, zstar) * c1 / 2.0;
        DistributionTable dt = distribution(fm);
        rep.values = {{"c1", c1}, {"delta1", delta1}, {"z_star", zstar}, {"M", M}};
        rep.bound = M * N;                       // lower bound on the mean
        rep.measured = dt.mean.to_double();
    }
    rep.finish();
    return rep;
}

// |f(u) - u E[X] - u^2 Var/2| <= |u|^3 N K for |u| <= eps/2, with
// f(u) = log(P(e^u z0)/P(z0)) accumulated over the root factorization.
inline CltBoundReport mgf_remainder_check(const FugacityModel& fm, const RootSet& rs,
                                          std::complex<double> u) {
    CltBoundReport rep;
    rep.theorem = "mgf_remainder";
    auto c = limits_detail::disc_constants(fm, rs);
    rep.hypotheses.push_back({"zero_free_disc_delta_positive", c.delta > 0.0, c.delta});
    rep.hypotheses.push_back(
        {"u_within_eps_half", c.delta > 0.0 && std::abs(u) <= c.eps / 2.0 + 1e-15,
         c.delta > 0.0 ? c.eps / 2.0 - std::abs(u) : -1.0});
    rep.values = {{"eps", c.eps}, {"K", c.K}, {"abs_u", std::abs(u)}};
    if (c.delta > 0.0 && std::abs(u) <= c.eps / 2.0 + 1e-15) {
        double z0 = fm.z0.to_double();
        std::complex<double> w = std::exp(u) * z0;
        std::complex<double> f = 0.0;
        for (const auto& r : rs.roots)
            f += std::log((w - r.value) / (std::complex<double>(z0, 0.0) - r.value));
        DistributionTable dt = distribution(fm);
        std::complex<double> taylor = u * dt.mean.to_double() +
                                      0.5 * u * u * dt.variance.to_double();
        double N = fm.poly.degree();
        rep.bound = std::pow(std::abs(u), 3.0) * N * c.K;
        rep.measured = std::abs(f - taylor);
        rep.vacuous = false;
    }
    rep.finish();
    rep.vacuous = false; // the remainder bound is not a probability bound
    return rep;
}

// Branch-consistent log of phi*(t) accumulated factor by factor; returns
// (|log phi*(t) + t^2 Var/2|, 3 |t|^3 Var) for the |D(t)| estimate.
inline std::pair<double, double> factor_log_cf_remainder(const std::vector<HarperFactor>& factors,
                                                         double t) {
    std::complex<double> acc = 0.0;
    double var = 0.0;
    const std::complex<double> eit(std::cos(t), std::sin(t));
    for (const auto& f : factors) {
        std::complex<double> num;
        double pj1, mean_j;
        if (!f.quadratic) {
            double eta = f.eta.real();
            num = eit + eta;
            pj1 = 1.0 + eta;
            mean_j = f.probs[1];
        } else {
            double re = f.eta.real(), a2 = std::norm(f.eta);
            num = eit * eit + 2.0 * re * eit + a2;
            pj1 = 1.0 + 2.0 * re + a2;
            mean_j = f.probs[1] + 2.0 * f.probs[2];
        }
        double ex2 = 0.0;
        for (std::size_t k = 0; k < f.probs.size(); ++k)
            ex2 += f.probs[k] * static_cast<double>(k) * static_cast<double>(k);
        var += ex2 - mean_j * mean_j;
        acc += std::log(num / pj1) - std::complex<double>(0.0, t * mean_j);
    }
    double lhs = std::abs(acc + std::complex<double>(t * t * var / 2.0, 0.0));
    return {lhs, 3.0 * std::fabs(t * t * t) * var};
}

} // namespace lyl
