#pragma once

// The probability layer: the distribution of X at fugacity z0 (exact
// rational arithmetic, rounded once), moments by two independent routes,
// the variance surrogates (W, Delta, f, alpha), sup-norm comparisons of the
// distribution against the Gaussian CDF/density, and the characteristic
// function P(e^{it} z0)/P(z0).

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "lyl/dd.hpp"
#include "lyl/errors.hpp"
#include "lyl/poly.hpp"
#include "lyl/rational.hpp"
#include "lyl/roots.hpp"

namespace lyl {

struct FugacityModel {
    CountPolynomial poly;
    BigRational z0;

    explicit FugacityModel(CountPolynomial p, BigRational fugacity = BigRational(1))
        : poly(std::move(p)), z0(std::move(fugacity)) {
        if (z0.sign() <= 0) throw InputError("fugacity z0 must be positive");
    }
    bool unit_fugacity() const { return z0 == BigRational(1); }

    // p_m -> p_m z0^m, cleared to integers; the induced X is unchanged
    FugacityModel rescaled_to_unit_fugacity() const {
        return FugacityModel(poly.rescaled_to_unit_fugacity(z0), BigRational(1));
    }
};

struct DistributionTable {
    std::vector<dd> q; // q_0..q_N
    dd mean{0.0};
    dd variance{0.0};
    int degree() const { return static_cast<int>(q.size()) - 1; }
    double sigma() const { return std::sqrt(variance.to_double()); }
};

// q_m = p_m z0^m / P(z0). With z0 = a/b this is the exact integer ratio
// p_m a^m b^(N-m) / sum_k p_k a^k b^(N-k); each entry is rounded exactly once.
inline DistributionTable distribution(const FugacityModel& fm) {
    const int N = fm.poly.degree();
    const BigInt& a = fm.z0.num();
    const BigInt& b = fm.z0.den();
    std::vector<BigInt> t(static_cast<std::size_t>(N) + 1);
    BigInt apow(1);
    std::vector<BigInt> bpow(static_cast<std::size_t>(N) + 1);
    bpow[0] = BigInt(1);
    for (int m = 1; m <= N; ++m) bpow[static_cast<std::size_t>(m)] = bpow[static_cast<std::size_t>(m - 1)] * b;
    BigInt S(0), S1(0), S2(0);
    for (int m = 0; m <= N; ++m) {
        t[static_cast<std::size_t>(m)] = fm.poly.coeff(m) * apow * bpow[static_cast<std::size_t>(N - m)];
        S += t[static_cast<std::size_t>(m)];
        S1 += t[static_cast<std::size_t>(m)] * BigInt(m);
        S2 += t[static_cast<std::size_t>(m)] * BigInt(m) * BigInt(m);
        apow *= a;
    }
    DistributionTable dt;
    dt.q.resize(static_cast<std::size_t>(N) + 1);
    dd Sdd = dd_from_bigint(S);
    for (int m = 0; m <= N; ++m)
        dt.q[static_cast<std::size_t>(m)] = dd_from_bigint(t[static_cast<std::size_t>(m)]) / Sdd;
    dt.mean = dd_from_bigint(S1) / Sdd;
    // Var = (S2*S - S1^2) / S^2, exact numerator
    dt.variance = dd_from_bigint(S2 * S - S1 * S1) / (Sdd * Sdd);
    return dt;
}

// Same table for a polynomial with real (dd) coefficients, e.g. spin systems.
inline DistributionTable distribution_real(const std::vector<dd>& coeffs, const BigRational& z0) {
    if (coeffs.empty()) throw InputError("empty polynomial");
    dd z = z0.to_dd();
    dd S(0.0), S1(0.0), S2(0.0);
    dd zp(1.0);
    std::vector<dd> t(coeffs.size());
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        t[m] = coeffs[m] * zp;
        S += t[m];
        S1 += t[m] * dd(static_cast<double>(m));
        S2 += t[m] * dd(static_cast<double>(m)) * dd(static_cast<double>(m));
        zp *= z;
    }
    DistributionTable dt;
    dt.q.resize(coeffs.size());
    for (std::size_t m = 0; m < coeffs.size(); ++m) dt.q[m] = t[m] / S;
    dt.mean = S1 / S;
    dt.variance = S2 / S - dt.mean * dt.mean;
    return dt;
}

// Independent route to the moments: mean = z0 P'(z0)/P(z0) and the second
// log-derivative form of the variance, evaluated by dd Horner rather than
// through the probability table.
inline std::pair<dd, dd> moments_via_log_derivative(const FugacityModel& fm) {
    std::vector<dd> c = fm.poly.dd_coeffs();
    dd z = fm.z0.to_dd();
    dd p(0.0), dp(0.0), d2p(0.0);
    for (std::size_t i = c.size(); i-- > 0;) {
        d2p = d2p * z + dd_mul_pow2(dp, 2.0);
        dp = dp * z + p;
        p = p * z + c[i];
    }
    dd ratio1 = z * dp / p;
    dd mean = ratio1;
    dd var = ratio1 + z * z * (d2p / p - (dp / p) * (dp / p));
    return {mean, var};
}

struct VarianceSurrogates {
    double W;     // (1/4) sum Re(eta_j) / (1 + |eta_j|^2)
    double Delta; // min_j |eta_j| Re(eta_j)
    double f;     // p_1 / p_0
    double alpha; // max_j |arg(eta_j)|
};

// Requires z0 = 1, p_0 > 0 and every root certified inside the closed left
// half plane; Re(eta) within a root's error radius of zero is projected to 0.
inline VarianceSurrogates variance_surrogates(const RootSet& rs, const FugacityModel& fm,
                                              double tol = 1e-9) {
    if (!fm.unit_fugacity())
        throw InputError("variance surrogates are defined at z0 = 1; rescale first");
    if (fm.poly.coeff(0).is_zero())
        throw InputError("variance surrogates require p_0 > 0");
    VarianceSurrogates out{0.0, 0.0, 0.0, 0.0};
    bool first = true;
    for (int j = 0; j < rs.degree(); ++j) {
        const Root& r = rs.roots[static_cast<std::size_t>(j)];
        if (r.value.real() > r.error_radius + tol)
            throw InputError("root " + std::to_string(j) +
                             " violates the left-half-plane precondition");
        std::complex<double> eta = -r.value;
        double re = std::max(0.0, eta.real());
        double a2 = std::norm(eta);
        out.W += re / (1.0 + a2);
        double delta_j = std::sqrt(a2) * re;
        if (first || delta_j < out.Delta) out.Delta = delta_j;
        first = false;
        out.alpha = std::max(out.alpha, std::fabs(std::atan2(eta.imag(), re)));
    }
    out.W *= 0.25;
    dd f = dd_from_bigint(fm.poly.coeff(1)) / dd_from_bigint(fm.poly.coeff(0));
    out.f = f.to_double();
    return out;
}

inline double gaussian_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// sup_x |F(x) - G(x)|, exact for the step function F: both one-sided values
// of |F - G| at every jump dominate the supremum (G is monotone).
inline double cdf_vs_gaussian_sup(const DistributionTable& dt) {
    double var = dt.variance.to_double();
    if (!(var > 0.0)) throw InputError("cdf comparison requires positive variance");
    double mean = dt.mean.to_double(), sigma = std::sqrt(var);
    dd cum(0.0);
    double best = 0.0;
    for (std::size_t m = 0; m < dt.q.size(); ++m) {
        double x = (static_cast<double>(m) - mean) / sigma;
        double g = gaussian_cdf(x);
        best = std::max(best, std::fabs(cum.to_double() - g)); // just below the jump
        cum += dt.q[m];
        best = std::max(best, std::fabs(cum.to_double() - g)); // at the jump
    }
    return best;
}

// sup over integers m of |Pr{X=m} - normal density at m|; m ranges over the
// support united with [mean - 10 sigma, mean + 10 sigma] (both tails are
// below 1e-20 outside). Off the support the comparison is against a
// unimodal density, so only the integers flanking the support matter there.
inline double lclt_sup_error(const DistributionTable& dt) {
    double var = dt.variance.to_double();
    if (!(var > 0.0)) throw InputError("lclt comparison requires positive variance");
    double mean = dt.mean.to_double();
    double norm = 1.0 / std::sqrt(2.0 * M_PI * var);
    auto density = [&](double m) {
        double x = m - mean;
        return norm * std::exp(-x * x / (2.0 * var));
    };
    double best = 0.0;
    for (long long m = 0; m <= dt.degree(); ++m)
        best = std::max(best,
                        std::fabs(dt.q[static_cast<std::size_t>(m)].to_double() -
                                  density(static_cast<double>(m))));
    // outside [0, N] the density decreases away from the mean (0 <= E[X] <= N)
    best = std::max(best, density(-1.0));
    best = std::max(best, density(static_cast<double>(dt.degree() + 1)));
    return best;
}

inline std::complex<double> characteristic_function_real(const std::vector<dd>& coeffs,
                                                         const BigRational& z0, double t) {
    dd z = z0.to_dd();
    cdd w(z * dd(std::cos(t)), z * dd(std::sin(t)));
    cdd p(dd(0.0));
    dd pr(0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        p = p * w + cdd(coeffs[i]);
    }
    for (std::size_t i = coeffs.size(); i-- > 0;) pr = pr * z + coeffs[i];
    cdd r = p * cdd(dd(1.0) / pr);
    return {r.re.to_double(), r.im.to_double()};
}

// phi(t) = E[e^{itX}] = P(e^{it} z0) / P(z0)
inline std::complex<double> characteristic_function(const FugacityModel& fm, double t) {
    return characteristic_function_real(fm.poly.dd_coeffs(), fm.z0, t);
}

} // namespace lyl
