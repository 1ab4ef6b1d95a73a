#pragma once

// Arbitrary-precision signed integers, base 2^32 sign/magnitude.
// Counting polynomials overflow 64-bit coefficients already for modest
// grids, so everything upstream of the floating-point layer runs on these.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "lyl/errors.hpp"

namespace lyl {

class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long long v) {
        if (v < 0) { sign_ = -1; set_u64(static_cast<unsigned long long>(-(v + 1)) + 1ULL); }
        else if (v > 0) { sign_ = 1; set_u64(static_cast<unsigned long long>(v)); }
    }
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long long v) {
        if (v != 0) { sign_ = 1; set_u64(v); }
    }

    static BigInt from_decimal(const std::string& s) {
        if (s.empty()) throw InputError("BigInt: empty decimal string");
        std::size_t i = 0;
        int sg = 1;
        if (s[0] == '+' || s[0] == '-') { sg = (s[0] == '-') ? -1 : 1; i = 1; }
        if (i == s.size()) throw InputError("BigInt: no digits in '" + s + "'");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw InputError("BigInt: bad digit in '" + s + "'");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        if (!r.is_zero()) r.sign_ = sg;
        return r;
    }

    // Exact conversion; requires an integral double (no fractional part).
    static BigInt from_double_exact(double x) {
        if (!std::isfinite(x) || x != std::floor(x))
            throw InputError("BigInt: double is not an exact integer");
        bool neg = std::signbit(x);
        x = std::fabs(x);
        int e = 0;
        double m = std::frexp(x, &e); // x = m * 2^e, m in [0.5,1)
        if (x == 0.0) return BigInt();
        long long mant = static_cast<long long>(std::ldexp(m, 53)); // exact, 53 bits
        int shift = e - 53;
        BigInt r(mant);
        if (shift > 0) r = r.shl(static_cast<unsigned>(shift));
        else if (shift < 0) r = r.shr(static_cast<unsigned>(-shift)); // exact: low bits are zero
        if (neg) r.sign_ = -r.sign_;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    std::size_t bit_length() const {
        if (is_zero()) return 0;
        std::size_t top = mag_.size() - 1;
        std::uint32_t h = mag_[top];
        std::size_t b = 0;
        while (h) { ++b; h >>= 1; }
        return top * 32 + b;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncated division (C semantics: quotient rounds toward zero).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw InputError("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm); q.normalize();
        r.mag_ = std::move(rm); r.normalize();
        if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_; else q.sign_ = 0;
        if (!r.mag_.empty()) r.sign_ = a.sign_; else r.sign_ = 0;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.is_zero() ? 0 : 1;
        b.sign_ = b.is_zero() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt pow(unsigned e) const {
        BigInt base = *this, r(1);
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    BigInt shl(unsigned bits) const {
        if (is_zero() || bits == 0) return *this;
        BigInt r = *this;
        unsigned words = bits / 32, rem = bits % 32;
        if (rem) {
            std::uint32_t carry = 0;
            for (auto& w : r.mag_) {
                std::uint64_t v = (static_cast<std::uint64_t>(w) << rem) | carry;
                w = static_cast<std::uint32_t>(v);
                carry = static_cast<std::uint32_t>(v >> 32);
            }
            if (carry) r.mag_.push_back(carry);
        }
        r.mag_.insert(r.mag_.begin(), words, 0u);
        return r;
    }
    BigInt shr(unsigned bits) const {
        BigInt r = *this;
        unsigned words = bits / 32, rem = bits % 32;
        if (words >= r.mag_.size()) return BigInt();
        r.mag_.erase(r.mag_.begin(), r.mag_.begin() + words);
        if (rem) {
            std::uint32_t carry = 0;
            for (std::size_t i = r.mag_.size(); i-- > 0;) {
                std::uint32_t w = r.mag_[i];
                r.mag_[i] = (w >> rem) | (carry << (32 - rem));
                carry = w & ((1u << rem) - 1u);
            }
        }
        r.normalize();
        if (r.mag_.empty()) r.sign_ = 0;
        return r;
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> tmp = mag_;
        std::string out;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            std::string chunk = std::to_string(rem);
            if (!tmp.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return (sign_ < 0 ? "-" : "") + out;
    }

    double to_double() const {
        if (is_zero()) return 0.0;
        std::size_t n = mag_.size();
        double v = 0.0;
        std::size_t take = std::min<std::size_t>(n, 3);
        for (std::size_t i = 0; i < take; ++i)
            v = v * 4294967296.0 + static_cast<double>(mag_[n - 1 - i]);
        double r = std::ldexp(v, static_cast<int>(32 * (n - take)));
        return sign_ < 0 ? -r : r;
    }

    // Fits in int64 (for fast paths / tests).
    bool fits_i64() const {
        if (mag_.size() > 2) return false;
        unsigned long long v = low_u64();
        if (sign_ >= 0) return v <= 0x7fffffffffffffffULL;
        return v <= 0x8000000000000000ULL;
    }
    long long to_i64() const {
        unsigned long long v = low_u64();
        return sign_ < 0 ? -static_cast<long long>(v) : static_cast<long long>(v);
    }

private:
    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // little-endian, no high zero limbs

    void set_u64(unsigned long long v) {
        mag_.clear();
        while (v) { mag_.push_back(static_cast<std::uint32_t>(v)); v >>= 32; }
    }
    unsigned long long low_u64() const {
        unsigned long long v = 0;
        if (mag_.size() > 1) v = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) v |= mag_[0];
        return v;
    }
    void normalize() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }
    void mul_small(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& w : mag_) {
            std::uint64_t v = static_cast<std::uint64_t>(w) * f + carry;
            w = static_cast<std::uint32_t>(v);
            carry = v >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        normalize();
        if (mag_.empty()) sign_ = 0;
    }
    void add_small(std::uint32_t v) {
        if (v == 0) return;
        if (sign_ == 0) { sign_ = 1; mag_.assign(1, v); return; }
        std::uint64_t carry = v;
        for (auto& w : mag_) {
            std::uint64_t s = static_cast<std::uint64_t>(w) + carry;
            w = static_cast<std::uint32_t>(s);
            carry = s >> 32;
            if (!carry) break;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t s = static_cast<std::uint64_t>(r[i]) + carry +
                              (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(r[i]) - borrow -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (s < 0) { s += (1LL << 32); borrow = 1; } else borrow = 0;
            r[i] = static_cast<std::uint32_t>(s);
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0u);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; |a| >= |b| > 0 assumed checked by caller.
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0u);
            std::uint64_t rem = 0, d = b[0];
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            r.clear();
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        const std::size_t n = b.size(), m = a.size() - n;
        int shift = 0;
        for (std::uint32_t top = b[n - 1]; !(top & 0x80000000u); top <<= 1) ++shift;

        std::vector<std::uint32_t> u(a.size() + 1, 0u), v(n, 0u);
        // normalized copies
        for (std::size_t i = 0; i < a.size(); ++i) u[i] = a[i];
        if (shift) {
            std::uint32_t carry = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                std::uint64_t x = (static_cast<std::uint64_t>(a[i]) << shift) | carry;
                u[i] = static_cast<std::uint32_t>(x);
                carry = static_cast<std::uint32_t>(x >> 32);
            }
            u[a.size()] = carry;
            carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t x = (static_cast<std::uint64_t>(b[i]) << shift) | carry;
                v[i] = static_cast<std::uint32_t>(x);
                carry = static_cast<std::uint32_t>(x >> 32);
            }
        } else {
            v = b;
        }

        q.assign(m + 1, 0u);
        const std::uint64_t B = 1ULL << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / v[n - 1];
            std::uint64_t rhat = num % v[n - 1];
            while (qhat >= B ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= B) break;
            }
            // multiply & subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
                if (t < 0) { t += static_cast<std::int64_t>(B); borrow = 1; } else borrow = 0;
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // rare: qhat one too large, add back
                t += static_cast<std::int64_t>(B);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(s);
                    c2 = s >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= static_cast<std::int64_t>(B - 1);
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.assign(u.begin(), u.begin() + n);
        if (shift) {
            std::uint32_t carry = 0;
            for (std::size_t i = r.size(); i-- > 0;) {
                std::uint32_t w = r[i];
                r[i] = (w >> shift) | (carry << (32 - shift));
                carry = w & ((1u << shift) - 1u);
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (unsigned i = 1; i <= k; ++i) {
        r *= BigInt(static_cast<unsigned long long>(n - k + i));
        BigInt q, rem;
        BigInt::divmod(r, BigInt(static_cast<unsigned long long>(i)), q, rem);
        r = q; // always exact
    }
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r *= BigInt(static_cast<unsigned long long>(i));
    return r;
}

} // namespace lyl
