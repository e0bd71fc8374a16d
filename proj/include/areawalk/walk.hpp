#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "areawalk/monomial.hpp"

namespace areawalk {

// One unit move on the square lattice.
enum class Step : std::uint8_t { Right = 0, Left = 1, Up = 2, Down = 3 };

inline constexpr int step_dx(Step s) {
    switch (s) {
        case Step::Right: return 1;
        case Step::Left: return -1;
        default: return 0;
    }
}

inline constexpr int step_dy(Step s) {
    switch (s) {
        case Step::Up: return 1;
        case Step::Down: return -1;
        default: return 0;
    }
}

inline constexpr Step step_inverse(Step s) {
    switch (s) {
        case Step::Right: return Step::Left;
        case Step::Left: return Step::Right;
        case Step::Up: return Step::Down;
        default: return Step::Up;
    }
}

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// A walk is a word over {r, l, u, d}; geometry is derived from the origin.
struct Walk {
    std::vector<Step> steps;

    Walk() = default;
    explicit Walk(std::vector<Step> s) : steps(std::move(s)) {}
    Walk(std::initializer_list<Step> s) : steps(s) {}

    std::size_t length() const { return steps.size(); }
    friend bool operator==(const Walk&, const Walk&) = default;
};

// Vertex sequence of length n+1 starting at the given origin.
std::vector<LatticePoint> vertices(const Walk& walk, LatticePoint origin = {0, 0});

// Algebraic area of an open walk,
//   S = sum_i x_i (y_{i+1} - y_i) + x_0 (y_0 - y_n),
// independent of the origin the vertices are computed from.
std::int64_t area(const Walk& walk);

// Same area as a double sum over step increments,
//   S = sum_{0 <= j < i <= n-1} eps_i delta_j
// with eps_i the y-increment of step i and delta_j the x-increment of step j.
// Quadratic; kept as an independent route for cross-checking.
std::int64_t area_double_sum(const Walk& walk);

// Same area once more: close the walk with an axis-parallel hook back to the
// start and take the signed shoelace area of that polygon.
std::int64_t closure_shoelace_area(const Walk& walk);

// Concatenation. Satisfies area(WW') = area(W) + area(W') + i*j' where (i,j)
// and (i',j') are the endpoints of W and W' from the origin.
Walk compose(const Walk& a, const Walk& b);

// (endpoint_x, endpoint_y, area); turns concatenation into the twisted
// product: monomial_of(compose(a,b)) == monomial_of(a) * monomial_of(b).
TwistedMonomial monomial_of(const Walk& walk);

// Text format: one of "rlud" per step, case-insensitive on input.
Walk parse_walk(std::string_view text);
std::string render_walk(const Walk& walk);

inline constexpr int kDefaultOracleCap = 14;
inline constexpr int kMaxOracleCap = 20;

// Exhaustive oracle: tallies monomial_of over all 4^n step words (optionally
// only those ending at `endpoint_filter`). Iterates a base-4 counter with no
// recursion; `threads` > 1 splits the word range into contiguous blocks whose
// tallies are merged in order, so the result is identical to a sequential
// run. Throws OracleLimitError when n exceeds the cap.
std::map<TwistedMonomial, std::uint64_t> brute_force_distribution(
    int n, std::optional<LatticePoint> endpoint_filter = std::nullopt,
    int oracle_cap = kDefaultOracleCap, int threads = 1);

}  // namespace areawalk
