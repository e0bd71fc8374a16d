#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace areawalk {

// Coefficient semirings for series arithmetic. A ring type supplies the
// value type plus add/mul/zero/is_zero; series are generic over it. Two
// realizations: exact big integers, and residues modulo a fixed prime.

// Arbitrary-precision nonnegative integer coefficients.
struct BigIntRing {
    using value_type = mpz_class;

    static value_type zero() { return mpz_class{}; }
    static value_type one() { return mpz_class{1}; }
    static bool is_zero(const value_type& v) { return sgn(v) == 0; }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static void add_assign(value_type& a, const value_type& b) { a += b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    // a += b*c without a temporary (lowers to mpz_addmul).
    static void add_mul_assign(value_type& a, const value_type& b, const value_type& c) {
        a += b * c;
    }

    friend bool operator==(const BigIntRing&, const BigIntRing&) = default;
};

// Residues modulo a fixed prime p < 2^32, so a product of two reduced values
// always fits in 64 bits.
struct ModRing {
    using value_type = std::uint64_t;

    std::uint64_t p;

    explicit ModRing(std::uint64_t modulus) : p(modulus) {
        if (p < 2 || p > 0xffffffffull)
            throw std::invalid_argument("ModRing: modulus must be in [2, 2^32)");
    }

    static value_type zero() { return 0; }
    static value_type one() { return 1; }
    static bool is_zero(value_type v) { return v == 0; }
    value_type add(value_type a, value_type b) const {
        value_type r = a + b;
        return r >= p ? r - p : r;
    }
    void add_assign(value_type& a, value_type b) const { a = add(a, b); }
    value_type mul(value_type a, value_type b) const { return (a * b) % p; }
    void add_mul_assign(value_type& a, value_type b, value_type c) const { a = add(a, mul(b, c)); }
    value_type reduce(const mpz_class& v) const {
        return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
    }

    friend bool operator==(const ModRing&, const ModRing&) = default;
};

inline std::string to_decimal(const mpz_class& v) { return v.get_str(10); }
inline std::string to_decimal(std::uint64_t v) { return std::to_string(v); }

}  // namespace areawalk
