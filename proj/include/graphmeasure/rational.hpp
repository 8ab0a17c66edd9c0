#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphmeasure {

/// Exact rational on 64-bit integers, always normalized: gcd(num, den) == 1
/// and den > 0. Arithmetic that would leave the int64 range throws
/// std::overflow_error; desk-scale measure values stay far below that.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    /// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
    /// anything else (including q <= 0).
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    /// Canonical form "p/q"; the denominator is printed even when it is 1.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        __int128 d = i128(den_) * o.den_;
        assign_wide(n, d);
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        assign_wide(i128(num_) * o.num_, i128(den_) * o.den_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        assign_wide(i128(num_) * o.den_, i128(den_) * o.num_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("rational arithmetic overflow");
        return static_cast<std::int64_t>(v);
    }

    void assign(std::int64_t n, std::int64_t d) {
        assign_wide(i128(n), i128(d));
    }

    void assign_wide(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd_wide(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = narrow(n);
        den_ = narrow(d);
    }

    static __int128 gcd_wide(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s, std::int64_t& out) -> bool {
        if (s.empty()) return false;
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
            if (i == s.size()) return false;
        }
        __int128 acc = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
            acc = acc * 10 + (s[i] - '0');
            if (acc > INT64_MAX) return false;
        }
        out = static_cast<std::int64_t>(neg ? -acc : acc);
        return true;
    };
    std::int64_t p = 0, q = 1;
    auto slash = text.find('/');
    bool ok = slash == std::string_view::npos
                  ? parse_int(text, p)
                  : parse_int(text.substr(0, slash), p) &&
                        parse_int(text.substr(slash + 1), q) && q > 0;
    if (!ok) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return Rational(p, q);
}

}  // namespace graphmeasure
