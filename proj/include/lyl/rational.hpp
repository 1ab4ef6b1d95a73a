#pragma once

// Exact rationals over BigInt. Fugacities, distribution entries and the
// Ginibre margins are kept in this form so equality/sign checks are exact.

#include <string>
#include <utility>

#include "lyl/bigint.hpp"
#include "lyl/dd.hpp"
#include "lyl/errors.hpp"

namespace lyl {

class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}
    BigRational(int n) : num_(n), den_(1) {}
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw InputError("rational with zero denominator");
        reduce();
    }

    // Accepts "3", "-3/4", "0.125", "1e-3" style decimal input, exactly.
    static BigRational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            return BigRational(BigInt::from_decimal(s.substr(0, slash)),
                               BigInt::from_decimal(s.substr(slash + 1)));
        }
        std::string t = s;
        long long exp10 = 0;
        auto epos = t.find_first_of("eE");
        if (epos != std::string::npos) {
            exp10 = std::stoll(t.substr(epos + 1));
            t = t.substr(0, epos);
        }
        auto dot = t.find('.');
        if (dot != std::string::npos) {
            std::string digits = t.substr(0, dot) + t.substr(dot + 1);
            exp10 -= static_cast<long long>(t.size() - dot - 1);
            t = digits;
        }
        if (t.empty() || t == "-" || t == "+") throw InputError("bad rational literal '" + s + "'");
        BigInt n = BigInt::from_decimal(t);
        BigInt d(1);
        if (exp10 > 0) n *= BigInt(10).pow(static_cast<unsigned>(exp10));
        else if (exp10 < 0) d = BigInt(10).pow(static_cast<unsigned>(-exp10));
        return BigRational(std::move(n), std::move(d));
    }

    // Exact conversion from a double (every finite double is dyadic).
    static BigRational from_double_exact(double x) {
        if (!std::isfinite(x)) throw InputError("non-finite fugacity");
        int e = 0;
        double m = std::frexp(x, &e);
        long long mant = static_cast<long long>(std::ldexp(m, 53));
        int shift = e - 53;
        BigInt n(mant), d(1);
        if (shift >= 0) n = n.shl(static_cast<unsigned>(shift));
        else d = BigInt(1).shl(static_cast<unsigned>(-shift));
        return BigRational(std::move(n), std::move(d));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw InputError("rational division by zero");
        return BigRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    BigRational operator-() const {
        BigRational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    BigRational& operator+=(const BigRational& o) { *this = *this + o; return *this; }
    BigRational& operator-=(const BigRational& o) { *this = *this - o; return *this; }
    BigRational& operator*=(const BigRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return (a.num_ * b.den_) < (b.num_ * a.den_);
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    BigRational pow(unsigned e) const { return BigRational(num_.pow(e), den_.pow(e)); }

    dd to_dd() const { return dd_from_bigint(num_) / dd_from_bigint(den_); }
    double to_double() const { return to_dd().to_double(); }

    std::string to_string() const {
        if (den_ == BigInt(1)) return num_.to_decimal();
        return num_.to_decimal() + "/" + den_.to_decimal();
    }

private:
    BigInt num_, den_; // den_ > 0, gcd(num_, den_) = 1

    void reduce() {
        if (den_.is_negative()) { den_ = -den_; num_ = -num_; }
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = BigInt::gcd(num_.abs(), den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

} // namespace lyl
