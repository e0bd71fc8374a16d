#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "areawalk/coeff.hpp"
#include "areawalk/errors.hpp"
#include "areawalk/monomial.hpp"

namespace areawalk {

enum class PowerStrategy { Binary, Iterative };

// A monomial (i,j,s) can appear in w^m only if |i|+|j| <= m, (m+i+j) is
// even, and 16|s| <= (m+|i|+|j|)^2.
inline bool monomial_feasible(std::int64_t m, const TwistedMonomial& t) {
    const std::int64_t d = std::abs(t.i) + std::abs(t.j);
    if (d > m) return false;
    if ((m + t.i + t.j) % 2 != 0) return false;
    const std::int64_t reach = m + d;
    std::int64_t abs16s = std::abs(t.s);
    if (__builtin_mul_overflow(abs16s, std::int64_t{16}, &abs16s)) return false;
    return abs16s <= reach * reach;
}

// Number of monomials satisfying the feasibility bounds for w^m; used to
// size hash tables and to refuse runs that cannot fit in memory.
inline std::uint64_t support_term_bound(int m) {
    std::uint64_t total = 0;
    for (std::int64_t d = m % 2; d <= m; d += 2) {
        const std::uint64_t points = d == 0 ? 1 : 4 * static_cast<std::uint64_t>(d);
        const std::uint64_t reach = static_cast<std::uint64_t>(m + d);
        total += points * (2 * (reach * reach / 16) + 1);
    }
    return total;
}

// Sparse element of the twisted group ring: map monomial -> coefficient,
// zero coefficients never stored. When the series is a known power w^m the
// exponent is carried along in meta_length and the support bounds above are
// enforced after every product.
template <typename Ring>
class WalkSeries {
  public:
    using ring_type = Ring;
    using value_type = typename Ring::value_type;
    using term_map = std::unordered_map<TwistedMonomial, value_type, MonomialHash>;

    explicit WalkSeries(Ring ring = Ring{}) : ring_(std::move(ring)) {}

    // The multiplicative unit {(0,0,0): 1} = w^0.
    static WalkSeries one(Ring ring = Ring{}) {
        WalkSeries s(std::move(ring));
        s.terms_.emplace(identity(), Ring::one());
        s.meta_length_ = 0;
        return s;
    }

    // The generating element x + x^-1 + y + y^-1 = w^1.
    static WalkSeries generator(Ring ring = Ring{}) {
        WalkSeries s(std::move(ring));
        s.terms_.emplace(TwistedMonomial{1, 0, 0}, Ring::one());
        s.terms_.emplace(TwistedMonomial{-1, 0, 0}, Ring::one());
        s.terms_.emplace(TwistedMonomial{0, 1, 0}, Ring::one());
        s.terms_.emplace(TwistedMonomial{0, -1, 0}, Ring::one());
        s.meta_length_ = 1;
        return s;
    }

    const Ring& ring() const { return ring_; }
    const term_map& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    std::optional<std::int64_t> meta_length() const { return meta_length_; }
    void set_meta_length(std::optional<std::int64_t> m) { meta_length_ = m; }

    value_type coefficient(const TwistedMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Ring::zero() : it->second;
    }

    // Accumulates into an existing term; erases it if the sum is zero.
    void add_term(const TwistedMonomial& m, const value_type& c) {
        if (Ring::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            ring_.add_assign(it->second, c);
            if (Ring::is_zero(it->second)) terms_.erase(it);
        }
    }

    value_type coefficient_sum() const {
        value_type acc = Ring::zero();
        for (const auto& [m, c] : terms_) ring_.add_assign(acc, c);
        return acc;
    }

    std::vector<std::pair<TwistedMonomial, value_type>> sorted_terms() const {
        std::vector<std::pair<TwistedMonomial, value_type>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    // Throws if a stored term violates the support bounds for meta_length.
    void validate_support() const {
        if (!meta_length_) return;
        for (const auto& [m, c] : terms_) {
            if (!monomial_feasible(*meta_length_, m))
                throw std::logic_error("WalkSeries: term " + to_string(m) +
                                       " outside the support of w^" +
                                       std::to_string(*meta_length_));
        }
    }

    void reserve(std::size_t n) { terms_.reserve(n); }

    // Debug/checkpoint dump: one term per line, "i j s coefficient",
    // canonical (i,j,s) order, decimal coefficients.
    void dump(std::ostream& os) const {
        for (const auto& [m, c] : sorted_terms())
            os << m.i << ' ' << m.j << ' ' << m.s << ' ' << to_decimal(c) << '\n';
    }

    friend bool operator==(const WalkSeries& a, const WalkSeries& b) {
        return a.ring_ == b.ring_ && a.meta_length_ == b.meta_length_ && a.terms_ == b.terms_;
    }

  private:
    Ring ring_;
    term_map terms_;
    std::optional<std::int64_t> meta_length_;

    template <typename R>
    friend WalkSeries<R> multiply_series(const WalkSeries<R>&, const WalkSeries<R>&);
};

// Twisted convolution: every pair of terms is combined with the group
// product and coefficient product, collisions summed, zeros dropped.
template <typename Ring>
WalkSeries<Ring> multiply_series(const WalkSeries<Ring>& a, const WalkSeries<Ring>& b) {
    if (!(a.ring() == b.ring()))
        throw RingMismatchError("multiply_series: operands use different coefficient realizations");
    const Ring& ring = a.ring();
    WalkSeries<Ring> out(ring);
    out.terms_.reserve(std::max(a.term_count(), b.term_count()) * 2);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto& slot = out.terms_[multiply(ma, mb)];
            ring.add_mul_assign(slot, ca, cb);
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return Ring::is_zero(kv.second); });
    if (a.meta_length() && b.meta_length()) {
        out.set_meta_length(*a.meta_length() + *b.meta_length());
        out.validate_support();
    }
    return out;
}

// w^n. BINARY follows the square-and-multiply chain on the bits of n;
// ITERATIVE multiplies by the 4-term generator n-1 times, which touches
// far fewer term pairs and is the default for large n. Both strategies
// produce identical series.
template <typename Ring>
WalkSeries<Ring> power(int n, PowerStrategy strategy, Ring ring = Ring{}) {
    if (n < 1) throw std::invalid_argument("power: n must be >= 1");
    if (strategy == PowerStrategy::Iterative) {
        auto gen = WalkSeries<Ring>::generator(ring);
        auto acc = gen;
        for (int step = 2; step <= n; ++step) acc = multiply_series(acc, gen);
        return acc;
    }
    auto base = WalkSeries<Ring>::generator(ring);
    auto acc = WalkSeries<Ring>::one(ring);
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) acc = multiply_series(acc, base);
        if (e > 1) base = multiply_series(base, base);
    }
    return acc;
}

namespace detail {

// Terms of one series grouped by endpoint, each group a dense coefficient
// vector over its s-range.
template <typename Ring>
struct EndpointBuckets {
    struct Bucket {
        std::int64_t s_min = 0;
        std::vector<typename Ring::value_type> dense;  // index s - s_min
    };
    std::unordered_map<TwistedMonomial, Bucket, MonomialHash> groups;  // key (i,j,0)

    explicit EndpointBuckets(const WalkSeries<Ring>& series) {
        std::unordered_map<TwistedMonomial, std::pair<std::int64_t, std::int64_t>, MonomialHash>
            ranges;
        for (const auto& [m, c] : series.terms()) {
            const TwistedMonomial key{m.i, m.j, 0};
            auto [it, inserted] = ranges.emplace(key, std::make_pair(m.s, m.s));
            if (!inserted) {
                it->second.first = std::min(it->second.first, m.s);
                it->second.second = std::max(it->second.second, m.s);
            }
        }
        for (const auto& [key, range] : ranges) {
            Bucket b;
            b.s_min = range.first;
            b.dense.assign(static_cast<std::size_t>(range.second - range.first + 1),
                           Ring::zero());
            groups.emplace(key, std::move(b));
        }
        for (const auto& [m, c] : series.terms()) {
            Bucket& b = groups.find(TwistedMonomial{m.i, m.j, 0})->second;
            b.dense[static_cast<std::size_t>(m.s - b.s_min)] = c;
        }
    }

    const Bucket* find(std::int64_t i, std::int64_t j) const {
        auto it = groups.find(TwistedMonomial{i, j, 0});
        return it == groups.end() ? nullptr : &it->second;
    }
};

}  // namespace detail

// The (p,q,*) slice of a*b without materializing the full product: each term
// (i1,j1,s1) of `a` only meets terms of `b` at endpoint (p-i1, q-j1), and
// the twist shifts the area by i1*(q-j1). Returns s -> coefficient.
template <typename Ring>
std::map<std::int64_t, typename Ring::value_type> restricted_product_at(
    const WalkSeries<Ring>& a, const WalkSeries<Ring>& b, std::int64_t p, std::int64_t q) {
    using value_type = typename Ring::value_type;
    if (!(a.ring() == b.ring()))
        throw RingMismatchError(
            "restricted_product_at: operands use different coefficient realizations");
    const Ring& ring = a.ring();

    const detail::EndpointBuckets<Ring> lhs(a);
    const detail::EndpointBuckets<Ring> rhs(b);

    // Pass 1: the s-range of the output.
    std::int64_t out_min = 0, out_max = -1;
    bool any = false;
    for (const auto& [key, la] : lhs.groups) {
        const auto* lb = rhs.find(p - key.i, q - key.j);
        if (!lb) continue;
        const std::int64_t shift = key.i * (q - key.j);
        const std::int64_t lo = la.s_min + lb->s_min + shift;
        const std::int64_t hi = lo + static_cast<std::int64_t>(la.dense.size()) +
                                static_cast<std::int64_t>(lb->dense.size()) - 2;
        if (!any) {
            out_min = lo;
            out_max = hi;
            any = true;
        } else {
            out_min = std::min(out_min, lo);
            out_max = std::max(out_max, hi);
        }
    }
    std::map<std::int64_t, value_type> result;
    if (!any) return result;

    std::vector<value_type> acc(static_cast<std::size_t>(out_max - out_min + 1), Ring::zero());
    for (const auto& [key, la] : lhs.groups) {
        const auto* lb = rhs.find(p - key.i, q - key.j);
        if (!lb) continue;
        const std::int64_t shift = key.i * (q - key.j);
        const std::size_t base =
            static_cast<std::size_t>(la.s_min + lb->s_min + shift - out_min);
        const auto& da = la.dense;
        const auto& db = lb->dense;
        if constexpr (std::is_same_v<Ring, ModRing>) {
            // Dense convolution, one inner product per output cell. Products
            // are < 2^62, so a 128-bit accumulator never overflows here.
            const std::uint64_t mod = ring.p;
            const std::size_t out_len = da.size() + db.size() - 1;
            for (std::size_t k = 0; k < out_len; ++k) {
                const std::size_t a_lo = k >= db.size() ? k - db.size() + 1 : 0;
                const std::size_t a_hi = std::min(k, da.size() - 1);
                unsigned __int128 sum = 0;
                for (std::size_t ia = a_lo; ia <= a_hi; ++ia)
                    sum += static_cast<unsigned __int128>(da[ia]) * db[k - ia];
                const std::uint64_t reduced = static_cast<std::uint64_t>(sum % mod);
                acc[base + k] = ring.add(acc[base + k], reduced);
            }
        } else {
            for (std::size_t ia = 0; ia < da.size(); ++ia) {
                if (Ring::is_zero(da[ia])) continue;
                for (std::size_t ib = 0; ib < db.size(); ++ib)
                    ring.add_mul_assign(acc[base + ia + ib], da[ia], db[ib]);
            }
        }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (!Ring::is_zero(acc[k])) result.emplace(out_min + static_cast<std::int64_t>(k),
                                                   std::move(acc[k]));
    }
    return result;
}

// Reads a canonical term dump back into a series (inverse of dump()).
template <typename Ring>
WalkSeries<Ring> parse_series_dump(std::istream& is, Ring ring = Ring{}) {
    WalkSeries<Ring> out(std::move(ring));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        TwistedMonomial m;
        std::string coeff;
        if (!(ls >> m.i >> m.j >> m.s >> coeff))
            throw std::invalid_argument("parse_series_dump: malformed term line: " + line);
        if constexpr (std::is_same_v<Ring, BigIntRing>) {
            out.add_term(m, mpz_class(coeff));
        } else {
            out.add_term(m, std::stoull(coeff));
        }
    }
    return out;
}

}  // namespace areawalk
