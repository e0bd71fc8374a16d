#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace areawalk {

// Group element x^i y^j z^s: i and j are the net lattice displacement of a
// walk, s its algebraic area. The product twists the area exponent:
//
//   (i,j,s) * (i',j',s') = (i+i', j+j', s+s'+i*j')
//
// so x and y commute only up to a power of the central z. Any integer triple
// is a valid element; triples arising from length-m walks additionally
// satisfy |i|+|j| <= m, (m+i+j) even, 16|s| <= (m+|i|+|j|)^2.
struct TwistedMonomial {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t s = 0;

    friend constexpr bool operator==(const TwistedMonomial&,
                                     const TwistedMonomial&) = default;
    // Canonical order: lexicographic by (i, j, s).
    friend constexpr auto operator<=>(const TwistedMonomial&,
                                      const TwistedMonomial&) = default;
};

inline constexpr TwistedMonomial identity() { return {0, 0, 0}; }

// Twisted product. Exponent arithmetic is checked: components stay well
// inside 64 bits for any feasible walk length (s grows like n^2/4), so an
// overflow here means misuse and is reported loudly.
inline TwistedMonomial multiply(const TwistedMonomial& a, const TwistedMonomial& b) {
    TwistedMonomial r;
    std::int64_t twist = 0;
    if (__builtin_add_overflow(a.i, b.i, &r.i) ||
        __builtin_add_overflow(a.j, b.j, &r.j) ||
        __builtin_mul_overflow(a.i, b.j, &twist) ||
        __builtin_add_overflow(a.s, b.s, &r.s) ||
        __builtin_add_overflow(r.s, twist, &r.s)) {
        throw std::overflow_error("TwistedMonomial: product exponent overflows 64 bits");
    }
    return r;
}

// Group inverse: multiply(a, inverse(a)) == identity().
inline TwistedMonomial inverse(const TwistedMonomial& a) {
    TwistedMonomial r;
    std::int64_t ij = 0;
    if (__builtin_sub_overflow(std::int64_t{0}, a.i, &r.i) ||
        __builtin_sub_overflow(std::int64_t{0}, a.j, &r.j) ||
        __builtin_mul_overflow(a.i, a.j, &ij) ||
        __builtin_sub_overflow(ij, a.s, &r.s)) {
        throw std::overflow_error("TwistedMonomial: inverse exponent overflows 64 bits");
    }
    return r;
}

inline TwistedMonomial operator*(const TwistedMonomial& a, const TwistedMonomial& b) {
    return multiply(a, b);
}

// Debug rendering: "x^2 y^-1 z^3", zero exponents omitted, empty product "1".
inline std::string to_string(const TwistedMonomial& m) {
    std::string out;
    auto append = [&out](const char* var, std::int64_t e) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += var;
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    };
    append("x", m.i);
    append("y", m.j);
    append("z", m.s);
    return out.empty() ? "1" : out;
}

struct MonomialHash {
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }
    std::size_t operator()(const TwistedMonomial& m) const {
        std::uint64_t h = mix(static_cast<std::uint64_t>(m.i));
        h = mix(h ^ static_cast<std::uint64_t>(m.j));
        h = mix(h ^ static_cast<std::uint64_t>(m.s));
        return static_cast<std::size_t>(h);
    }
};

}  // namespace areawalk
