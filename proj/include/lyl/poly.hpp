#pragma once

// CountPolynomial: exact nonnegative integer coefficients p_0..p_N with
// p_N > 0. The coefficient list is the canonical object every pipeline
// (counting, roots, statistics) agrees on.

#include <string>
#include <utility>
#include <vector>

#include "lyl/bigint.hpp"
#include "lyl/dd.hpp"
#include "lyl/errors.hpp"
#include "lyl/rational.hpp"

namespace lyl {

class CountPolynomial {
public:
    CountPolynomial() = default;
    explicit CountPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        trim();
        validate();
    }
    static CountPolynomial from_i64(const std::vector<long long>& v) {
        std::vector<BigInt> c;
        c.reserve(v.size());
        for (long long x : v) c.emplace_back(x);
        return CountPolynomial(std::move(c));
    }

    // (1 + z)^n, exact binomials
    static CountPolynomial binomial_power(unsigned n) {
        std::vector<BigInt> c(n + 1);
        for (unsigned k = 0; k <= n; ++k) c[k] = binomial(n, k);
        return CountPolynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int m) const {
        static const BigInt zero(0);
        if (m < 0 || m > degree()) return zero;
        return c_[static_cast<std::size_t>(m)];
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool operator==(const CountPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const CountPolynomial& o) const { return !(*this == o); }

    BigInt sum_coeffs() const {
        BigInt s(0);
        for (const auto& x : c_) s += x;
        return s;
    }

    BigRational eval_rational(const BigRational& z) const {
        BigRational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * z + BigRational(c_[i]);
        return acc;
    }

    std::vector<dd> dd_coeffs() const {
        std::vector<dd> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(dd_from_bigint(x));
        return v;
    }

    // Rescales p_m -> p_m * a^m * b^(N-m) for z0 = a/b; the distribution of X
    // at fugacity z0 equals the distribution of the rescaled polynomial at
    // fugacity 1 (the overall factor b^N cancels). Coefficients stay integral.
    CountPolynomial rescaled_to_unit_fugacity(const BigRational& z0) const {
        if (z0.sign() <= 0) throw InputError("fugacity must be positive");
        const unsigned N = static_cast<unsigned>(degree());
        std::vector<BigInt> out(c_.size());
        BigInt apow(1);
        for (unsigned m = 0; m < c_.size(); ++m) {
            out[m] = c_[m] * apow * z0.den().pow(N - m);
            apow *= z0.num();
        }
        return CountPolynomial(std::move(out));
    }

    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(x.to_decimal());
        return out;
    }

private:
    std::vector<BigInt> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void validate() const {
        if (c_.empty()) throw InputError("count polynomial is identically zero");
        for (const auto& x : c_)
            if (x.is_negative()) throw InputError("count polynomial has a negative coefficient");
    }
};

// Test-support exact product (used by reconstruction-style checks).
inline std::vector<BigInt> poly_mul_exact(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

} // namespace lyl
