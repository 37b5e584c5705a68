#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "layercast/bigint.hpp"
#include "layercast/errors.hpp"

namespace layercast {

/// Exact rational number in canonical form: den > 0, gcd(|num|, den) == 1,
/// zero is 0/1. Equality is structural, which canonical form makes equivalent
/// to numeric equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(errc::internal_check, "rational with zero denominator");
        canonicalize();
    }

    /// Accepts "a/b", a bare integer, or a plain decimal like "0.75"
    /// (converted exactly with a power-of-ten denominator).
    static Rational parse(std::string_view s) {
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            if (s.find('.') != std::string_view::npos)
                fail(errc::parse_error, "mixed decimal/fraction literal: " + std::string(s));
            BigInt n(s.substr(0, slash));
            BigInt d(s.substr(slash + 1));
            if (d.is_zero()) fail(errc::parse_error, "zero denominator: " + std::string(s));
            return Rational(std::move(n), std::move(d));
        }
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            std::string_view frac = s.substr(dot + 1);
            if (frac.empty() || frac.find_first_of("+-.") != std::string_view::npos)
                fail(errc::parse_error, "bad decimal literal: " + std::string(s));
            std::string digits(s.substr(0, dot));
            if (digits.empty() || digits == "+" || digits == "-") digits += '0';
            digits.append(frac);
            BigInt n{std::string_view(digits)};
            return Rational(std::move(n), BigInt::pow10(static_cast<int>(frac.size())));
        }
        return Rational(BigInt(s), BigInt(1));
    }

    /// Exact value of a finite binary64 (every finite double is a rational).
    static Rational from_double_exact(double v) {
        if (!std::isfinite(v)) fail(errc::out_of_range, "non-finite double");
        if (v == 0.0) return Rational();
        int exp = 0;
        double m = std::frexp(v, &exp);  // v = m * 2^exp, |m| in [0.5, 1)
        auto mant = static_cast<long long>(std::ldexp(m, 53));  // exact: 53-bit integer
        int e2 = exp - 53;
        if (e2 >= 0) return Rational(BigInt(mant) * BigInt::pow2(e2), BigInt(1));
        return Rational(BigInt(mant), BigInt::pow2(-e2));
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    int signum() const noexcept { return num_.signum(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(errc::internal_check, "rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    Rational reciprocal() const {
        if (is_zero()) fail(errc::internal_check, "reciprocal of zero");
        return Rational(den_, num_);
    }

    std::string to_fraction_string() const { return num_.to_string() + "/" + den_.to_string(); }

    /// Plain decimal with exactly `sig` significant digits, round-half-even.
    /// Trailing zeros are kept so output width is deterministic; zero prints "0".
    std::string to_decimal_string(int sig = 12) const {
        if (num_.is_zero()) return "0";
        BigInt a = num_.abs();
        // exponent e with 10^e <= a/den < 10^(e+1)
        int e = a.decimal_digits() - den_.decimal_digits();
        if (a * BigInt::pow10(e < 0 ? -e : 0) < den_ * BigInt::pow10(e > 0 ? e : 0)) --e;
        // q = |value| * 10^(sig-1-e), rounded half-even to an integer of `sig` digits
        int scale = sig - 1 - e;
        BigInt n = scale >= 0 ? a * BigInt::pow10(scale) : a;
        BigInt d = scale >= 0 ? den_ : den_ * BigInt::pow10(-scale);
        auto [q, r] = BigInt::divmod(n, d);
        BigInt twice = r + r;
        if (twice > d || (twice == d && q.is_odd())) q += BigInt(1);
        std::string digits = q.to_string();
        if (static_cast<int>(digits.size()) > sig) {  // rounding overflowed to the next decade
            digits.pop_back();
            ++e;
        }
        std::string out;
        if (num_.signum() < 0) out += '-';
        if (e < 0) {
            out += "0.";
            out.append(static_cast<std::size_t>(-e - 1), '0');
            out += digits;
        } else if (e + 1 >= sig) {
            out += digits;
            out.append(static_cast<std::size_t>(e + 1 - sig), '0');
        } else {
            out.append(digits, 0, static_cast<std::size_t>(e + 1));
            out += '.';
            out.append(digits, static_cast<std::size_t>(e + 1), std::string::npos);
        }
        return out;
    }

    double to_double() const { return std::strtod(to_decimal_string(17).c_str(), nullptr); }

private:
    BigInt num_, den_;

    void canonicalize() {
        if (den_.signum() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ /= g;
            den_ /= g;
        }
    }
};

}  // namespace layercast
