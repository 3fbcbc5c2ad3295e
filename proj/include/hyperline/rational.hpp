#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hyperline {

/// Thrown when a rational no longer fits in 64-bit numerator/denominator.
class RationalOverflow : public std::overflow_error {
public:
    RationalOverflow() : std::overflow_error("rational overflow: value does not fit in 64 bits") {}
};

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always kept in canonical form: gcd(num, den) == 1 and den > 0.
/// All intermediate products are computed in 128 bits; results that do not
/// reduce back into 64 bits raise RationalOverflow instead of losing
/// exactness. Edge lengths, distances and hyperbolicity constants at the
/// scale this library targets stay far below the limit.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        unsigned __int128 g = gcd128(mag(n), static_cast<unsigned __int128>(d));
        if (g > 1) { n /= static_cast<__int128>(g); d /= static_cast<__int128>(g); }
        constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
        constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
        if (n < lo || n > hi || d > hi) throw RationalOverflow();
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    /// Parses "p/q", "p", or "-p/q". Whitespace is not accepted.
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("empty rational literal");
        std::size_t slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(parse_int(text), 1);
            return Rational(parse_int(text.substr(0, slash)),
                            parse_int(text.substr(slash + 1)));
        } catch (const std::domain_error&) {
            throw std::invalid_argument("invalid rational literal '" + text + "': zero denominator");
        }
    }

    Rational operator-() const { return make(-static_cast<__int128>(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.num_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(static_cast<__int128>(a.num_) * b.den_,
                    static_cast<__int128>(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Largest integer q with q * step <= *this (both nonnegative).
    std::int64_t floor_div(const Rational& step) const {
        if (!step.is_positive() || is_negative())
            throw std::domain_error("floor_div expects nonnegative value and positive step");
        __int128 n = static_cast<__int128>(num_) * step.den_;
        __int128 d = static_cast<__int128>(den_) * step.num_;
        return static_cast<std::int64_t>(n / d);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static unsigned __int128 mag(__int128 v) {
        return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    }
    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) { unsigned __int128 t = a % b; a = b; b = t; }
        return a;
    }
    static std::int64_t parse_int(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid integer '" + s + "' in rational literal");
        }
        if (pos != s.size()) throw std::invalid_argument("invalid integer '" + s + "' in rational literal");
        return v;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace hyperline
