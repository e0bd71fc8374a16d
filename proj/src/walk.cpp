#include "areawalk/walk.hpp"

#include <cctype>
#include <stdexcept>
#include <thread>

#include "areawalk/errors.hpp"

namespace areawalk {

std::vector<LatticePoint> vertices(const Walk& walk, LatticePoint origin) {
    std::vector<LatticePoint> out;
    out.reserve(walk.steps.size() + 1);
    out.push_back(origin);
    LatticePoint cur = origin;
    for (Step s : walk.steps) {
        cur.x += step_dx(s);
        cur.y += step_dy(s);
        out.push_back(cur);
    }
    return out;
}

std::int64_t area(const Walk& walk) {
    // Running x * dy accumulation plus the closure term; from the origin the
    // closure term x_0 (y_0 - y_n) vanishes, so it is simply omitted here.
    std::int64_t x = 0;
    std::int64_t acc = 0;
    for (Step s : walk.steps) {
        acc += x * step_dy(s);
        x += step_dx(s);
    }
    return acc;
}

std::int64_t area_double_sum(const Walk& walk) {
    const auto& steps = walk.steps;
    std::int64_t acc = 0;
    for (std::size_t i = 1; i < steps.size(); ++i) {
        const std::int64_t eps = step_dy(steps[i]);
        if (eps == 0) continue;
        std::int64_t dx_prefix = 0;
        for (std::size_t j = 0; j < i; ++j) dx_prefix += step_dx(steps[j]);
        acc += eps * dx_prefix;
    }
    return acc;
}

std::int64_t closure_shoelace_area(const Walk& walk) {
    auto pts = vertices(walk);
    // Closure polygon: vertices, then (x0, yn), back to (x0, y0).
    pts.push_back({pts.front().x, pts.back().y});
    pts.push_back(pts.front());
    std::int64_t twice_area = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        twice_area += pts[i].x * pts[i + 1].y - pts[i + 1].x * pts[i].y;
    }
    if (twice_area % 2 != 0)
        throw std::logic_error("closure_shoelace_area: odd shoelace sum on a rectilinear polygon");
    return twice_area / 2;
}

Walk compose(const Walk& a, const Walk& b) {
    Walk out;
    out.steps.reserve(a.steps.size() + b.steps.size());
    out.steps = a.steps;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

TwistedMonomial monomial_of(const Walk& walk) {
    std::int64_t x = 0, y = 0, s = 0;
    for (Step st : walk.steps) {
        s += x * step_dy(st);
        x += step_dx(st);
        y += step_dy(st);
    }
    return {x, y, s};
}

Walk parse_walk(std::string_view text) {
    Walk out;
    out.steps.reserve(text.size());
    for (char c : text) {
        switch (std::tolower(static_cast<unsigned char>(c))) {
            case 'r': out.steps.push_back(Step::Right); break;
            case 'l': out.steps.push_back(Step::Left); break;
            case 'u': out.steps.push_back(Step::Up); break;
            case 'd': out.steps.push_back(Step::Down); break;
            default:
                throw std::invalid_argument(std::string("parse_walk: invalid step '") + c +
                                            "' (expected one of r l u d)");
        }
    }
    return out;
}

std::string render_walk(const Walk& walk) {
    static constexpr char names[4] = {'r', 'l', 'u', 'd'};
    std::string out;
    out.reserve(walk.steps.size());
    for (Step s : walk.steps) out += names[static_cast<int>(s)];
    return out;
}

namespace {

// Tally one contiguous block [lo, hi) of base-4 step words.
std::map<TwistedMonomial, std::uint64_t> tally_range(
    int n, std::uint64_t lo, std::uint64_t hi,
    const std::optional<LatticePoint>& endpoint_filter) {
    static constexpr int dx[4] = {1, -1, 0, 0};
    static constexpr int dy[4] = {0, 0, 1, -1};
    std::map<TwistedMonomial, std::uint64_t> tally;
    for (std::uint64_t word = lo; word < hi; ++word) {
        std::int64_t x = 0, y = 0, s = 0;
        std::uint64_t w = word;
        for (int k = 0; k < n; ++k) {
            const unsigned d = w & 3u;
            w >>= 2;
            s += x * dy[d];
            x += dx[d];
            y += dy[d];
        }
        if (endpoint_filter && (x != endpoint_filter->x || y != endpoint_filter->y)) continue;
        ++tally[{x, y, s}];
    }
    return tally;
}

}  // namespace

std::map<TwistedMonomial, std::uint64_t> brute_force_distribution(
    int n, std::optional<LatticePoint> endpoint_filter, int oracle_cap, int threads) {
    if (n < 0) throw std::invalid_argument("brute_force_distribution: n must be nonnegative");
    if (oracle_cap > kMaxOracleCap) oracle_cap = kMaxOracleCap;
    if (n > oracle_cap)
        throw OracleLimitError("brute_force_distribution: n=" + std::to_string(n) +
                               " exceeds oracle cap " + std::to_string(oracle_cap));
    const std::uint64_t total = 1ull << (2 * n);
    if (threads < 1) threads = 1;
    const std::uint64_t blocks = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);

    if (blocks <= 1) return tally_range(n, 0, total, endpoint_filter);

    std::vector<std::map<TwistedMonomial, std::uint64_t>> partial(blocks);
    std::vector<std::thread> workers;
    workers.reserve(blocks);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        const std::uint64_t lo = total / blocks * b + std::min(b, total % blocks);
        const std::uint64_t hi = total / blocks * (b + 1) + std::min(b + 1, total % blocks);
        workers.emplace_back([&, b, lo, hi] { partial[b] = tally_range(n, lo, hi, endpoint_filter); });
    }
    for (auto& w : workers) w.join();

    std::map<TwistedMonomial, std::uint64_t> merged;
    for (auto& part : partial)
        for (const auto& [m, c] : part) merged[m] += c;
    return merged;
}

}  // namespace areawalk
