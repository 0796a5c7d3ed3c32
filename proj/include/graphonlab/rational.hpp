#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "graphonlab/errors.hpp"

namespace graphonlab {

// Exact fraction with 64-bit numerator/denominator, always normalized
// (den > 0, gcd(|num|, den) = 1). Block masses and partition boundaries
// are kept rational so refinement chains do not drift.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long num, long long den = 1) : num_(num), den_(den) { normalize(); }

    static Rational parse(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return from_i128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

private:
    static Rational from_i128(__int128 num, __int128 den);
    void normalize();

    long long num_ = 0;
    long long den_ = 1;
};

inline void Rational::normalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

inline Rational Rational::from_i128(__int128 num, __int128 den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    constexpr __int128 lim = INT64_MAX;
    if (num > lim || num < -lim || den > lim)
        throw DomainError("rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
}

inline Rational Rational::parse(std::string_view text) {
    std::size_t slash = text.find('/');
    auto parse_ll = [&](std::string_view part, std::size_t base_off) -> long long {
        if (part.empty()) throw ParseError("empty rational component", base_off);
        std::size_t i = 0;
        bool neg = false;
        if (part[i] == '+' || part[i] == '-') {
            neg = part[i] == '-';
            ++i;
        }
        if (i == part.size()) throw ParseError("missing digits in rational", base_off + i);
        long long v = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9')
                throw ParseError("bad digit in rational", base_off + i);
            v = v * 10 + (part[i] - '0');
            if (v < 0) throw ParseError("rational component overflow", base_off + i);
        }
        return neg ? -v : v;
    };
    if (slash == std::string_view::npos) return Rational(parse_ll(text, 0));
    long long p = parse_ll(text.substr(0, slash), 0);
    long long q = parse_ll(text.substr(slash + 1), slash + 1);
    if (q == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(p, q);
}

inline std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace graphonlab
