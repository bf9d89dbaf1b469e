#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pauvc {

/// Exact rational with int64 numerator/denominator. Comparisons go through
/// __int128 cross-multiplication, so values parsed from decimal or p/q input
/// never suffer floating-point boundary errors (adjacency tests on unit
/// intervals compare differences against exactly 1).
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
    static Rat integer(std::int64_t n) { return Rat(n, 1); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// b - a <= 1, assuming nothing about order. Used as the closed-interval
    /// intersection test for unit intervals: [a,a+1] meets [b,b+1] iff |a-b| <= 1.
    static bool within_unit(const Rat& a, const Rat& b) {
        __int128 lhs = (__int128)b.num * a.den - (__int128)a.num * b.den;
        if (lhs < 0) lhs = -lhs;
        return lhs <= (__int128)a.den * b.den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Accepts "12", "-3.25", or "7/4". Throws std::invalid_argument otherwise.
Rat parse_rational(std::string_view text);

}  // namespace pauvc
