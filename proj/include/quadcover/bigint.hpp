/*
   Copyright 2026 The quadcover authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QUADCOVER_BIGINT_HPP
#define QUADCOVER_BIGINT_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quadcover {

/// Signed arbitrary-precision integer, sign-magnitude with base 10^9 limbs.
///
/// All operations are exact. Magnitudes in this library stay small (a few
/// limbs), so schoolbook algorithms are used throughout.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v) { assign(v); }

    explicit BigInt(std::string_view s) {
        std::size_t i = 0;
        bool negative = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            negative = (s[i] == '-');
            ++i;
        }
        if (i == s.size())
            throw std::invalid_argument("BigInt: empty numeral");
        std::vector<std::uint32_t> digits;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
            digits.push_back(static_cast<std::uint32_t>(s[i] - '0'));
        }
        // pack decimal digits into base-1e9 limbs, least significant first
        for (std::size_t pos = digits.size(); pos > 0; pos -= std::min<std::size_t>(pos, 9)) {
            std::size_t lo = pos >= 9 ? pos - 9 : 0;
            std::uint32_t limb = 0;
            for (std::size_t k = lo; k < pos; ++k) limb = limb * 10 + digits[k];
            mag_.push_back(limb);
        }
        trim();
        sign_ = mag_.empty() ? 0 : (negative ? -1 : 1);
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }
    bool is_odd() const { return !mag_.empty() && (mag_[0] & 1u); }
    bool is_even() const { return !is_odd(); }

    bool fits_int64() const {
        static const BigInt lo = BigInt(std::string_view("-9223372036854775808"));
        static const BigInt hi = BigInt(std::string_view("9223372036854775807"));
        return *this >= lo && *this <= hi;
    }

    std::int64_t to_int64() const {
        if (!fits_int64())
            throw std::overflow_error("BigInt: does not fit in int64");
        std::int64_t v = 0;
        for (std::size_t i = mag_.size(); i > 0; --i)
            v = v * kBase + mag_[i - 1];
        return sign_ < 0 ? -v : v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out += std::to_string(mag_.back());
        for (std::size_t i = mag_.size() - 1; i > 0; --i) {
            std::string limb = std::to_string(mag_[i - 1]);
            out.append(9 - limb.size(), '0');
            out += limb;
        }
        return out;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ >= 0) return c <=> 0;
        return 0 <=> c;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
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
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    /// Truncated division: q = trunc(a/b), r = a - q*b (sign of r follows a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero())
            throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm); q.trim();
        r.mag_ = std::move(rm); r.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
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

    /// Least nonnegative residue of a mod m (m > 0).
    static BigInt mod_floor(const BigInt& a, const BigInt& m) {
        BigInt r = a % m;
        if (r.is_negative()) r += m;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    /// g = gcd(a,b) plus x,y with a*x + b*y = g.
    static BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
        BigInt old_r = a, r = b;
        BigInt old_x = 1, xx = 0;
        BigInt old_y = 0, yy = 1;
        while (!r.is_zero()) {
            BigInt q, rem;
            divmod(old_r, r, q, rem);
            old_r = std::exchange(r, rem);
            BigInt tx = old_x - q * xx;
            old_x = std::exchange(xx, tx);
            BigInt ty = old_y - q * yy;
            old_y = std::exchange(yy, ty);
        }
        if (old_r.is_negative()) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
        x = old_x;
        y = old_y;
        return old_r;
    }

    static BigInt pow(BigInt base, std::uint64_t e) {
        BigInt r = 1;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /// Floor square root of a nonnegative value.
    static BigInt isqrt(const BigInt& a) {
        if (a.is_negative())
            throw std::domain_error("BigInt: isqrt of negative value");
        if (a.is_zero()) return BigInt();
        BigInt lo = 0, hi = a + BigInt(1);
        while (lo + BigInt(1) < hi) {  // invariant: lo^2 <= a < hi^2
            BigInt mid = (lo + hi) / BigInt(2);
            if (mid * mid <= a) lo = mid; else hi = mid;
        }
        return lo;
    }

    /// Deterministic Miller-Rabin, exact for all inputs below 3.3e24;
    /// larger inputs get a strong probable-prime answer with the same bases.
    static bool is_probable_prime(const BigInt& n) {
        if (n < BigInt(2)) return false;
        for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            if (n == BigInt(p)) return true;
            if ((n % BigInt(p)).is_zero()) return false;
        }
        BigInt d = n - BigInt(1);
        int s = 0;
        while (d.is_even()) { d = d / BigInt(2); ++s; }
        for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            BigInt x = mod_pow(BigInt(a), d, n);
            if (x == BigInt(1) || x == n - BigInt(1)) continue;
            bool witness = true;
            for (int i = 1; i < s; ++i) {
                x = mod_floor(x * x, n);
                if (x == n - BigInt(1)) { witness = false; break; }
            }
            if (witness) return false;
        }
        return true;
    }

    static BigInt mod_pow(BigInt base, BigInt e, const BigInt& m) {
        BigInt r = 1;
        base = mod_floor(base, m);
        while (!e.is_zero()) {
            if (e.is_odd()) r = mod_floor(r * base, m);
            base = mod_floor(base * base, m);
            e = e / BigInt(2);
        }
        return r;
    }

private:
    static constexpr std::int64_t kBase = 1000000000;

    void assign(std::int64_t v) {
        mag_.clear();
        sign_ = v == 0 ? 0 : (v < 0 ? -1 : 1);
        // careful with INT64_MIN: negate via unsigned
        std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1u : static_cast<std::uint64_t>(v);
        while (u) {
            mag_.push_back(static_cast<std::uint32_t>(u % kBase));
            u /= kBase;
        }
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i > 0; --i)
            if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(std::max(a.size(), b.size()) + 1);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            std::int64_t s = carry;
            if (i < a.size()) s += a[i];
            if (i < b.size()) s += b[i];
            r.push_back(static_cast<std::uint32_t>(s % kBase));
            carry = static_cast<std::uint32_t>(s / kBase);
        }
        if (carry) r.push_back(carry);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (s < 0) { s += kBase; borrow = 1; } else borrow = 0;
            r[i] = static_cast<std::uint32_t>(s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
                acc[i + j] = cur % kBase;
                carry = cur / kBase;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = acc[k] + carry;
                acc[k] = cur % kBase;
                carry = cur / kBase;
                ++k;
            }
        }
        std::vector<std::uint32_t> r(acc.begin(), acc.end());
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // schoolbook long division, one base-1e9 digit at a time
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.assign(a.size(), 0);
        std::vector<std::uint32_t> rem;  // running remainder, little-endian
        for (std::size_t i = a.size(); i > 0; --i) {
            rem.insert(rem.begin(), a[i - 1]);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            // binary search the digit d with d*b <= rem < (d+1)*b
            std::uint32_t lo = 0, hi = kBase - 1, d = 0;
            while (lo <= hi) {
                std::uint32_t mid = lo + (hi - lo) / 2;
                if (cmp_mag(mul_mag(b, {mid}), rem) <= 0) {
                    d = mid;
                    lo = mid + 1;
                } else {
                    if (mid == 0) break;
                    hi = mid - 1;
                }
            }
            q[i - 1] = d;
            if (d) rem = sub_mag(rem, mul_mag(b, {d}));
        }
        r = std::move(rem);
    }

    int sign_ = 0;
    std::vector<std::uint32_t> mag_;  // base 1e9, little-endian, no leading zeros
};

}  // namespace quadcover

#endif  // QUADCOVER_BIGINT_HPP
