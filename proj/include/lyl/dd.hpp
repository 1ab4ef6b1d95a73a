#pragma once

// Double-double arithmetic (~32 significant digits) plus a complex wrapper.
// This is the working precision for root polishing, distribution sums and
// spin-system weights; transcendental entry points (exp, log, sqrt) are
// accurate to a few ulps of the 106-bit format.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "lyl/bigint.hpp"

namespace lyl {

struct dd {
    double hi = 0.0, lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}
    constexpr dd(int v) : hi(v), lo(0.0) {}
    constexpr dd(long long v) : hi(static_cast<double>(v)),
                                lo(static_cast<double>(v - static_cast<long long>(static_cast<double>(v)))) {}

    double to_double() const { return hi + lo; }
    bool is_zero() const { return hi == 0.0 && lo == 0.0; }
};

namespace detail {
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}
inline void quick_two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    e = b - (s - a);
}
inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}
} // namespace detail

inline dd dd_norm(double hi, double lo) {
    double s, e;
    detail::quick_two_sum(hi, lo, s, e);
    return {s, e};
}

inline dd operator+(dd a, dd b) {
    double s1, s2, t1, t2;
    detail::two_sum(a.hi, b.hi, s1, s2);
    detail::two_sum(a.lo, b.lo, t1, t2);
    s2 += t1;
    detail::quick_two_sum(s1, s2, s1, s2);
    s2 += t2;
    detail::quick_two_sum(s1, s2, s1, s2);
    return {s1, s2};
}
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator*(dd a, dd b) {
    double p, e;
    detail::two_prod(a.hi, b.hi, p, e);
    e += a.hi * b.lo + a.lo * b.hi;
    detail::quick_two_sum(p, e, p, e);
    return {p, e};
}
inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    double s, e;
    detail::quick_two_sum(q1, q2, s, e);
    dd q = dd(s, e) + dd(q3);
    return q;
}
inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }
inline dd& operator/=(dd& a, dd b) { a = a / b; return a; }

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b) { return b < a; }
inline bool operator<=(dd a, dd b) { return !(b < a); }
inline bool operator>=(dd a, dd b) { return !(a < b); }
inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(dd a, dd b) { return !(a == b); }

inline dd dd_abs(dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }
inline dd dd_mul_pow2(dd a, double p) { return {a.hi * p, a.lo * p}; }

inline dd dd_sqrt(dd a) {
    if (a.is_zero()) return dd(0.0);
    if (a.hi < 0.0) throw NumericalError("dd_sqrt of negative value");
    double x = 1.0 / std::sqrt(a.hi);
    double ax = a.hi * x;
    dd err = a - dd(ax) * dd(ax);
    double step = err.hi * (x * 0.5);
    dd r = dd(ax) + dd(step);
    // one more Newton pass in full dd
    dd e2 = a - r * r;
    r = r + e2 * dd(0.5) / r;
    return r;
}

inline const dd dd_pi{3.141592653589793116, 1.224646799147353207e-16};
inline const dd dd_two_pi{6.283185307179586232, 2.449293598294706414e-16};
inline const dd dd_ln2{6.931471805599452862e-01, 2.319046813846299558e-17};

inline dd dd_exp(dd a) {
    if (a.hi > 709.0) return dd(std::numeric_limits<double>::infinity());
    if (a.hi < -709.0) return dd(0.0);
    double m = std::floor(a.hi / dd_ln2.hi + 0.5);
    dd r = a - dd_ln2 * dd(m);
    r = dd_mul_pow2(r, 1.0 / 512.0);
    // Taylor of e^r, |r| <= ln2/1024
    dd sum = dd(1.0) + r;
    dd term = r;
    for (int k = 2; k <= 9; ++k) {
        term = term * r / dd(static_cast<double>(k));
        sum += term;
        if (std::fabs(term.hi) < 1e-40) break;
    }
    for (int i = 0; i < 9; ++i) sum = sum * sum;
    return {std::ldexp(sum.hi, static_cast<int>(m)), std::ldexp(sum.lo, static_cast<int>(m))};
}

inline dd dd_log(dd a) {
    if (a.hi <= 0.0) throw NumericalError("dd_log of non-positive value");
    dd x(std::log(a.hi));
    x = x + a * dd_exp(-x) - dd(1.0); // one Newton step from the double seed
    return x;
}

inline dd dd_from_bigint(const BigInt& v) {
    double hi = v.to_double();
    BigInt rem = v - BigInt::from_double_exact(hi);
    double lo = rem.to_double();
    return dd_norm(hi, lo);
}

// Complex double-double.
struct cdd {
    dd re, im;
    cdd() = default;
    cdd(dd r) : re(r), im(0.0) {}
    cdd(dd r, dd i) : re(r), im(i) {}
    cdd(double r, double i = 0.0) : re(r), im(i) {}
};

inline cdd operator+(cdd a, cdd b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator-(cdd a, cdd b) { return {a.re - b.re, a.im - b.im}; }
inline cdd operator-(cdd a) { return {-a.re, -a.im}; }
inline cdd operator*(cdd a, cdd b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd operator/(cdd a, cdd b) {
    dd d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline cdd& operator+=(cdd& a, cdd b) { a = a + b; return a; }
inline cdd& operator-=(cdd& a, cdd b) { a = a - b; return a; }
inline cdd& operator*=(cdd& a, cdd b) { a = a * b; return a; }

inline dd cdd_abs2(cdd a) { return a.re * a.re + a.im * a.im; }
inline dd cdd_abs(cdd a) { return dd_sqrt(cdd_abs2(a)); }
inline cdd cdd_conj(cdd a) { return {a.re, -a.im}; }

} // namespace lyl
