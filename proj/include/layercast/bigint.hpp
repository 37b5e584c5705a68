#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "layercast/errors.hpp"

namespace layercast {

/// Arbitrary-precision signed integer.
///
/// Magnitude is stored little-endian in base 2^32 with no leading zero limbs;
/// an empty magnitude is the canonical zero. Division truncates toward zero,
/// so the remainder carries the sign of the dividend (same convention as
/// built-in integer division).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(u));
        if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_u64(std::uint64_t u) {
        BigInt r;
        if (u == 0) return r;
        r.sign_ = 1;
        r.mag_.push_back(static_cast<std::uint32_t>(u));
        if (u >> 32) r.mag_.push_back(static_cast<std::uint32_t>(u >> 32));
        return r;
    }

    /// Parses an optionally signed decimal string. Rejects anything else.
    explicit BigInt(std::string_view s) {
        if (s.empty()) fail(errc::parse_error, "empty integer literal");
        int sign = 1;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            sign = s[0] == '-' ? -1 : 1;
            i = 1;
        }
        if (i == s.size()) fail(errc::parse_error, "integer literal has no digits");
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') fail(errc::parse_error, "bad digit in integer literal");
            mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
        }
        sign_ = mag_.empty() ? 0 : sign;
    }

    bool is_zero() const noexcept { return sign_ == 0; }
    int signum() const noexcept { return sign_; }
    bool is_odd() const noexcept { return !mag_.empty() && (mag_[0] & 1u); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
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
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncating division: returns (quotient, remainder) with
    /// a == q*b + r and |r| < |b|, r has the sign of a.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) fail(errc::internal_check, "division by zero");
        BigInt q, r;
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
        return {std::move(q), std::move(r)};
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    /// Exact power of two (used when converting binary64 values).
    static BigInt pow2(int e) {
        BigInt r;
        r.sign_ = 1;
        r.mag_.assign(static_cast<std::size_t>(e / 32) + 1, 0);
        r.mag_.back() = std::uint32_t{1} << (e % 32);
        return r;
    }

    static BigInt pow10(int e) {
        BigInt r(1);
        for (int i = 0; i < e; ++i) r.mul_small_add(10, 0);
        return r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    /// Converts to uint64, throwing when negative or out of range.
    std::uint64_t to_u64() const {
        if (sign_ < 0) fail(errc::out_of_range, "negative value in to_u64");
        if (mag_.size() > 2) fail(errc::out_of_range, "value exceeds 64 bits");
        std::uint64_t r = 0;
        if (mag_.size() >= 1) r = mag_[0];
        if (mag_.size() == 2) r |= static_cast<std::uint64_t>(mag_[1]) << 32;
        return r;
    }

    double to_double() const {
        double d = 0.0;
        for (std::size_t i = mag_.size(); i-- > 0;) d = d * 4294967296.0 + mag_[i];
        return sign_ < 0 ? -d : d;
    }

    /// Number of decimal digits of |x| (1 for zero).
    int decimal_digits() const {
        if (sign_ == 0) return 1;
        // bit length gives a two-candidate window; settle with one compare
        std::size_t bits = (mag_.size() - 1) * 32 + (32 - std::countl_zero(mag_.back()));
        int est = static_cast<int>(static_cast<double>(bits) * 0.30102999566398119) + 1;
        if (est > 1 && abs() < pow10(est - 1)) --est;
        return est;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void mul_small_add(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        if (!mag_.empty() && sign_ == 0) sign_ = 1;
        trim(mag_);
        if (mag_.empty()) sign_ = 0;
    }

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
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
        std::vector<std::uint32_t> r;
        r.reserve(big.size() + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(a.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            borrow = cur < 0 ? 1 : 0;
            if (cur < 0) cur += std::int64_t{1} << 32;
            r.push_back(static_cast<std::uint32_t>(cur));
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = ai * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + b.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    // Knuth algorithm D on 32-bit limbs.
    static void divmod_mag(const std::vector<std::uint32_t>& u_in,
                           const std::vector<std::uint32_t>& v_in,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(u_in, v_in) < 0) {
            r = u_in;
            return;
        }
        if (v_in.size() == 1) {
            std::uint64_t d = v_in[0];
            q.assign(u_in.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = u_in.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | u_in[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            trim(q);
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }

        const int shift = std::countl_zero(v_in.back());
        const std::size_t n = v_in.size();
        std::vector<std::uint32_t> v = shl_bits(v_in, shift);
        std::vector<std::uint32_t> u = shl_bits(u_in, shift);
        u.resize(u_in.size() + 1, 0);  // u[m+n] slot; shl_bits may or may not have grown by one

        const std::size_t m = u.size() - 1 - n;
        q.assign(m + 1, 0);
        const std::uint64_t base = std::uint64_t{1} << 32;

        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / v[n - 1];
            std::uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply and subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
                borrow = t < 0 ? 1 : 0;
                if (t < 0) t += static_cast<std::int64_t>(base);
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add v back
                t += static_cast<std::int64_t>(base);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(s);
                    c2 = s >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= static_cast<std::int64_t>(base) - 1;
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        trim(q);
        u.resize(n);
        r = shr_bits(u, shift);
    }

    static std::vector<std::uint32_t> shl_bits(const std::vector<std::uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<std::uint32_t> r(a.size() + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> shr_bits(std::vector<std::uint32_t> a, int s) {
        if (s == 0) {
            trim(a);
            return a;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] >>= s;
            if (i + 1 < a.size()) a[i] |= a[i + 1] << (32 - s);
        }
        trim(a);
        return a;
    }
};

}  // namespace layercast
