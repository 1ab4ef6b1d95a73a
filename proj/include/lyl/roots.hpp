#pragma once

// All-roots solver for real-coefficient polynomials: Aberth–Ehrlich
// simultaneous iteration seeded on a slightly eccentric circle, followed by
// Newton polishing in double-double. Error radii are a-posteriori
// Weierstrass-correction bounds inflated x10; roots whose imaginary part is
// below their radius are snapped to the real axis and non-real roots are
// averaged to exact conjugate pairs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lyl/dd.hpp"
#include "lyl/errors.hpp"
#include "lyl/poly.hpp"

namespace lyl {

struct Root {
    std::complex<double> value;
    double error_radius = 0.0;
    bool is_real = false;
    int conj_index = -1; // partner under conjugation; own index for real roots
};

struct RootSet {
    std::vector<Root> roots;
    int degree() const { return static_cast<int>(roots.size()); }

    // roots written as -eta_j, i.e. eta_j = -zeta_j
    std::complex<double> eta(int j) const { return -roots[static_cast<std::size_t>(j)].value; }

    static RootSet all_equal(std::complex<double> value, int multiplicity, double err = 0.0) {
        RootSet rs;
        rs.roots.resize(static_cast<std::size_t>(multiplicity));
        for (int j = 0; j < multiplicity; ++j) {
            rs.roots[static_cast<std::size_t>(j)] =
                Root{value, err, value.imag() == 0.0, j};
        }
        if (value.imag() != 0.0)
            throw InputError("all_equal with a non-real value cannot be conjugate-paired");
        return rs;
    }
};

namespace roots_detail {

inline void eval_dd(const std::vector<dd>& c, cdd z, cdd& p, cdd& dp) {
    p = cdd(c.back());
    dp = cdd(dd(0.0));
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + cdd(c[i]);
    }
}

inline std::complex<double> eval_d(const std::vector<std::complex<double>>& c,
                                   std::complex<double> z,
                                   std::complex<double>* dp_out = nullptr) {
    std::complex<double> p = c.back(), dp = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    if (dp_out) *dp_out = dp;
    return p;
}

inline double start_radius(const std::vector<double>& c) {
    const std::size_t n = c.size() - 1;
    double up = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (c[n - k] == 0.0) continue;
        up = std::max(up, std::pow(std::fabs(c[n - k] / c[n]), 1.0 / static_cast<double>(k)));
    }
    up *= 2.0;
    double down = up;
    if (c[0] != 0.0) {
        double rev = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (c[k] == 0.0) continue;
            rev = std::max(rev, std::pow(std::fabs(c[k] / c[0]), 1.0 / static_cast<double>(k)));
        }
        if (rev > 0.0) down = 1.0 / (2.0 * rev);
    }
    double r = std::sqrt(std::max(down, 1e-12) * std::max(up, 1e-12));
    return (std::isfinite(r) && r > 0.0) ? r : 1.0;
}

} // namespace roots_detail

// Real dd coefficients, low order first; degree >= 1 with nonzero leading term.
inline RootSet find_roots(std::vector<dd> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 2) throw InputError("root finding needs degree >= 1");
    for (const auto& c : coeffs)
        if (!std::isfinite(c.hi)) throw InputError("non-finite polynomial coefficient");

    // uniform power-of-two scaling; roots are unchanged
    {
        int emax = 0;
        std::frexp(std::fabs(coeffs.back().hi), &emax);
        for (const auto& c : coeffs) {
            int e = 0;
            std::frexp(std::fabs(c.hi), &e);
            if (c.hi != 0.0) emax = std::max(emax, e);
        }
        double s = std::ldexp(1.0, -emax);
        for (auto& c : coeffs) c = dd_mul_pow2(c, s);
    }

    // zero roots: strip leading zero coefficients
    std::size_t zero_roots = 0;
    while (zero_roots + 1 < coeffs.size() && coeffs[zero_roots].is_zero()) ++zero_roots;
    std::vector<dd> c(coeffs.begin() + static_cast<std::ptrdiff_t>(zero_roots), coeffs.end());
    const std::size_t n = c.size() - 1;

    std::vector<std::complex<double>> z(n);
    const double eps_dd = 1e-31;

    if (n == 1) {
        cdd r = cdd(-c[0]) / cdd(c[1]);
        z[0] = {r.re.to_double(), 0.0};
    } else if (n == 2) {
        dd A = c[2], B = c[1], C0 = c[0];
        dd disc = B * B - dd(4.0) * A * C0;
        if (disc.hi >= 0.0) {
            dd sq = dd_sqrt(disc);
            // q = -(B + sign(B) sqrt(disc))/2; roots q/A and C0/q
            dd q = (B.hi >= 0.0) ? dd_mul_pow2(B + sq, -0.5) : dd_mul_pow2(B - sq, -0.5);
            z[0] = {(q / A).to_double(), 0.0};
            z[1] = {(C0 / q).to_double(), 0.0};
        } else {
            dd re = -B / (dd(2.0) * A);
            dd im = dd_sqrt(-disc) / (dd(2.0) * A);
            z[0] = {re.to_double(), std::fabs(im.to_double())};
            z[1] = std::conj(z[0]);
        }
    } else {
        std::vector<std::complex<double>> cd(c.size());
        std::vector<double> cabs(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            cd[i] = {c[i].to_double(), 0.0};
            cabs[i] = std::fabs(c[i].to_double());
        }
        double r0 = roots_detail::start_radius(cabs);
        // evaluation-noise floor at |z|: eps * sum |c_k| |z|^k
        auto noise_at = [&](double az) {
            double nb = 0.0, zp = 1.0;
            for (std::size_t k = 0; k < cabs.size(); ++k) {
                nb += cabs[k] * zp;
                zp *= az;
            }
            return 2.3e-16 * nb;
        };
        bool converged = false;
        for (int attempt = 0; attempt < 5 && !converged; ++attempt) {
            const int iter_cap = 400 << attempt;
            const double phase = 0.7 + 0.9 * attempt;
            for (std::size_t j = 0; j < n; ++j) {
                double th = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n) +
                            phase / static_cast<double>(n);
                z[j] = {r0 * std::cos(th), 0.93 * r0 * std::sin(th)};
            }
            // per-root freeze: a root is done when its residual sits on the
            // evaluation-noise floor or its correction is below 1 ulp-scale
            std::vector<char> done(n, 0);
            for (int it = 0; it < iter_cap && !converged; ++it) {
                bool all = true;
                for (std::size_t j = 0; j < n; ++j) {
                    if (done[j]) continue;
                    std::complex<double> dp;
                    std::complex<double> p = roots_detail::eval_d(cd, z[j], &dp);
                    if (std::abs(p) <= 4.0 * noise_at(std::abs(z[j]))) { done[j] = 1; continue; }
                    all = false;
                    std::complex<double> ratio = (dp != std::complex<double>(0.0, 0.0))
                                                     ? p / dp
                                                     : std::complex<double>(1e-3, 1e-3);
                    std::complex<double> S = 0.0;
                    for (std::size_t k = 0; k < n; ++k)
                        if (k != j) S += 1.0 / (z[j] - z[k]);
                    std::complex<double> denom = 1.0 - ratio * S;
                    std::complex<double> w =
                        (denom != std::complex<double>(0.0, 0.0)) ? ratio / denom : ratio;
                    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                        w = {1e-6 * (1.0 + std::abs(z[j])), 0.0};
                    z[j] -= w;
                    if (std::abs(w) <= 1e-14 * (1.0 + std::abs(z[j]))) done[j] = 1;
                }
                if (all) converged = true;
            }
        }
        if (!converged) {
            double resid = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                resid = std::max(resid, std::abs(roots_detail::eval_d(cd, z[j])));
            throw NumericalError("root iteration did not converge; worst residual " +
                                 std::to_string(resid));
        }
    }

    // Newton polish at double-double precision (damped: keep only improving
    // steps; the generous step budget lets multiple-root clusters creep in at
    // their linear rate)
    std::vector<cdd> zq(n);
    for (std::size_t j = 0; j < n; ++j) {
        cdd x(dd(z[j].real()), dd(z[j].imag()));
        cdd p, dp;
        roots_detail::eval_dd(c, x, p, dp);
        dd pmag = cdd_abs2(p);
        for (int step = 0; step < 64; ++step) {
            if (pmag.hi == 0.0) break;
            dd dpmag = cdd_abs2(dp);
            if (dpmag.hi == 0.0) break;
            cdd nx = x - p / dp;
            cdd np, ndp;
            roots_detail::eval_dd(c, nx, np, ndp);
            dd npmag = cdd_abs2(np);
            if (!(npmag < pmag)) break;
            x = nx; p = np; dp = ndp; pmag = npmag;
        }
        zq[j] = x;
        z[j] = {x.re.to_double(), x.im.to_double()};
    }

    // a-posteriori error radii via log-accumulated Weierstrass corrections;
    // an exactly vanishing residual short-circuits to the precision floor
    std::vector<double> err(n);
    for (std::size_t j = 0; j < n; ++j) {
        cdd p, dp;
        roots_detail::eval_dd(c, zq[j], p, dp);
        double floor = 4.0 * eps_dd * (1.0 + std::abs(z[j]));
        double pmag2 = cdd_abs2(p).to_double();
        if (pmag2 == 0.0) {
            err[j] = floor;
            continue;
        }
        double logw = 0.5 * std::log(pmag2);
        logw -= std::log(std::fabs(c[n].to_double()));
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) logw -= std::log(std::max(std::abs(z[j] - z[k]), 1e-320));
        double e = 10.0 * std::exp(logw);
        if (!std::isfinite(e)) e = 1e300;
        err[j] = std::max(e, floor);
    }

    // consolidate noise-limited clusters: approximants of a multiple root sit
    // on a noise ring around it, and replacing them by one refined location
    // repairs the symmetric functions; the inflated radii keep covering every
    // original position
    {
        std::vector<std::size_t> rep(n);
        for (std::size_t j = 0; j < n; ++j) rep[j] = j;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (rep[x] != x) x = rep[x] = rep[rep[x]];
            return x;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (std::abs(z[i] - z[j]) <= 0.5 * (err[i] + err[j])) rep[find(i)] = find(j);
        std::map<std::size_t, std::vector<std::size_t>> groups;
        for (std::size_t j = 0; j < n; ++j) groups[find(j)].push_back(j);
        for (const auto& [root, members] : groups) {
            const std::size_t m = members.size();
            if (m < 2) continue;
            std::complex<double> centroid = 0.0;
            for (std::size_t j : members) centroid += z[j];
            centroid /= static_cast<double>(m);
            // a multiplicity-m root of P is a simple root of P^(m-1): Newton
            // there recovers the location to full dd accuracy
            std::vector<dd> der = c;
            for (std::size_t k = 0; k + 1 < m; ++k) {
                for (std::size_t i = 1; i < der.size(); ++i)
                    der[i - 1] = der[i] * dd(static_cast<double>(i));
                der.pop_back();
            }
            cdd x(dd(centroid.real()), dd(centroid.imag()));
            double spread0 = 0.0;
            for (std::size_t j : members) spread0 = std::max(spread0, std::abs(z[j] - centroid));
            bool ok = der.size() >= 2;
            for (int it = 0; ok && it < 8; ++it) {
                cdd p, dp;
                roots_detail::eval_dd(der, x, p, dp);
                if (cdd_abs2(dp).hi == 0.0) { ok = false; break; }
                cdd step = p / dp;
                double s = std::sqrt(cdd_abs2(step).to_double());
                if (!std::isfinite(s) || s > 16.0 * (spread0 + 1e-300)) { ok = false; break; }
                x = x - step;
                if (s < 1e-28 * (1.0 + std::sqrt(cdd_abs2(x).to_double()))) break;
            }
            std::complex<double> loc =
                ok ? std::complex<double>(x.re.to_double(), x.im.to_double()) : centroid;
            if (std::abs(loc - centroid) > 4.0 * (spread0 + 1e-300)) loc = centroid;
            double spread = 0.0;
            for (std::size_t j : members) spread = std::max(spread, std::abs(z[j] - loc));
            for (std::size_t j : members) {
                z[j] = loc;
                err[j] = std::max(err[j], 2.0 * spread);
            }
        }
    }

    // snap near-real roots
    for (std::size_t j = 0; j < n; ++j)
        if (std::fabs(z[j].imag()) <= err[j]) z[j] = {z[j].real(), 0.0};

    // conjugate pairing: zip the sorted upper and lower half-plane roots.
    // Uneven counts can only come from asymmetric snapping inside a cluster;
    // the excess roots closest to the axis are snapped too (radii inflated
    // to keep the inclusion honest).
    std::vector<int> upper, lower;
    auto collect = [&] {
        upper.clear();
        lower.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (z[j].imag() > 0.0) upper.push_back(static_cast<int>(j));
            else if (z[j].imag() < 0.0) lower.push_back(static_cast<int>(j));
        }
    };
    collect();
    while (upper.size() != lower.size()) {
        auto& excess = upper.size() > lower.size() ? upper : lower;
        std::size_t pick = 0;
        for (std::size_t i = 1; i < excess.size(); ++i)
            if (std::fabs(z[static_cast<std::size_t>(excess[i])].imag()) <
                std::fabs(z[static_cast<std::size_t>(excess[pick])].imag()))
                pick = i;
        std::size_t j = static_cast<std::size_t>(excess[pick]);
        err[j] = std::max(err[j], 2.0 * std::fabs(z[j].imag()));
        z[j] = {z[j].real(), 0.0};
        collect();
    }
    auto by_pos = [&](int a, int b) {
        double ra = z[static_cast<std::size_t>(a)].real(), rb = z[static_cast<std::size_t>(b)].real();
        if (ra != rb) return ra < rb;
        return std::fabs(z[static_cast<std::size_t>(a)].imag()) < std::fabs(z[static_cast<std::size_t>(b)].imag());
    };
    std::sort(upper.begin(), upper.end(), by_pos);
    std::sort(lower.begin(), lower.end(), by_pos);

    RootSet rs;
    rs.roots.resize(zero_roots + n);
    for (std::size_t j = 0; j < zero_roots; ++j)
        rs.roots[j] = Root{{0.0, 0.0}, 0.0, true, static_cast<int>(j)};
    auto out = [&](std::size_t local) { return zero_roots + local; };
    std::vector<bool> placed(n, false);
    for (std::size_t i = 0; i < upper.size(); ++i) {
        std::size_t a = static_cast<std::size_t>(upper[i]), b = static_cast<std::size_t>(lower[i]);
        double re = 0.5 * (z[a].real() + z[b].real());
        double im = 0.5 * (z[a].imag() - z[b].imag());
        double e = std::max(err[a], err[b]);
        rs.roots[out(a)] = Root{{re, im}, e, false, static_cast<int>(out(b))};
        rs.roots[out(b)] = Root{{re, -im}, e, false, static_cast<int>(out(a))};
        placed[a] = placed[b] = true;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!placed[j])
            rs.roots[out(j)] = Root{z[j], err[j], true, static_cast<int>(out(j))};
    return rs;
}

inline RootSet find_roots(const CountPolynomial& p) {
    if (p.degree() < 1) throw InputError("root finding needs degree >= 1");
    return find_roots(p.dd_coeffs());
}

struct RootClassification {
    std::vector<int> j1; // real roots
    std::vector<int> j2; // representatives of conjugate pairs, Im(eta) > 0
};

// Partition {1..N} by eta_j = -zeta_j: J1 real, J2 the Im(eta) > 0 half of
// each conjugate pair; requires all roots in the closed left half plane
// within their certified tolerance.
inline RootClassification classify_roots(const RootSet& rs, double tol = 1e-9) {
    RootClassification cl;
    for (int j = 0; j < rs.degree(); ++j) {
        const Root& r = rs.roots[static_cast<std::size_t>(j)];
        if (r.value.real() > r.error_radius + tol)
            throw InputError("root " + std::to_string(j) + " lies outside the closed left half plane");
        if (r.is_real) cl.j1.push_back(j);
        else if (rs.eta(j).imag() > 0.0) {
            if (r.conj_index < 0 || rs.roots[static_cast<std::size_t>(r.conj_index)].is_real)
                throw NumericalError("unpaired non-real root in classification");
            cl.j2.push_back(j);
        }
    }
    if (static_cast<int>(cl.j1.size() + 2 * cl.j2.size()) != rs.degree())
        throw NumericalError("root classification does not cover the root set");
    return cl;
}

} // namespace lyl
