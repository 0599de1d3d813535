#pragma once

#include <cstdint>
#include <functional>

namespace weyldisp {

// Element of Z[tau], tau = (1+sqrt5)/2, tau^2 = tau + 1. Crystallographic root
// coordinates live in the subring b == 0; H3/H4 need the full ring.
struct QuadInt {
    std::int64_t a{0};
    std::int64_t b{0};

    constexpr QuadInt() = default;
    constexpr QuadInt(std::int64_t ra) : a(ra) {}
    constexpr QuadInt(std::int64_t ra, std::int64_t rb) : a(ra), b(rb) {}

    friend constexpr QuadInt operator+(QuadInt x, QuadInt y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr QuadInt operator-(QuadInt x, QuadInt y) { return {x.a - y.a, x.b - y.b}; }
    friend constexpr QuadInt operator-(QuadInt x) { return {-x.a, -x.b}; }
    friend constexpr QuadInt operator*(QuadInt x, QuadInt y) {
        // (a+b tau)(c+d tau) = ac + bd + (ad + bc + bd) tau
        return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend constexpr bool operator==(QuadInt x, QuadInt y) { return x.a == y.a && x.b == y.b; }
    friend constexpr bool operator!=(QuadInt x, QuadInt y) { return !(x == y); }
    friend constexpr bool operator<(QuadInt x, QuadInt y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;  // ordering for map keys only
    }

    constexpr bool is_zero() const { return a == 0 && b == 0; }

    // Sign of a + b*(1+sqrt5)/2 as a real number.
    constexpr int sign() const {
        const std::int64_t x = 2 * a + b;  // value = (x + b*sqrt5)/2
        const std::int64_t y = b;
        if (x >= 0 && y >= 0) return (x == 0 && y == 0) ? 0 : 1;
        if (x <= 0 && y <= 0) return (x == 0 && y == 0) ? 0 : -1;
        if (x > 0) return x * x > 5 * y * y ? 1 : -1;  // y < 0
        return 5 * y * y > x * x ? 1 : -1;             // x < 0, y > 0
    }
    constexpr bool positive() const { return sign() > 0; }
};

}  // namespace weyldisp

template <>
struct std::hash<weyldisp::QuadInt> {
    std::size_t operator()(const weyldisp::QuadInt& q) const noexcept {
        return std::hash<std::int64_t>{}(q.a * 0x9e3779b97f4a7c15LL + q.b);
    }
};
