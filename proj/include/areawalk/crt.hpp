#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace areawalk {

// Deterministic Miller-Rabin, exact for all n < 3,215,031,751 (witnesses
// 2, 3, 5, 7) — more than covers the 31-bit primes used here.
bool is_prime(std::uint64_t n);

// Distinct primes p_1 < ... < p_k whose product strictly exceeds 4^n for
// the walk length the basis serves. Each prime is below 2^31 so residue
// products fit comfortably in 64-bit arithmetic.
struct PrimeBasis {
    std::vector<std::uint64_t> primes;
    int modulus_product_bits = 0;

    std::size_t size() const { return primes.size(); }
    mpz_class product() const;
};

// The deterministic basis for walk length n: the fewest consecutive primes
// descending from the largest prime below 2^31 whose product exceeds 4^n.
PrimeBasis select_primes(int n);

// Per-prime residues of one count, aligned with a PrimeBasis.
struct ResidueVector {
    std::vector<std::uint64_t> residues;
};

// The unique N in [0, prod p_i) with N = t_i (mod p_i) for every i, by
// incremental Garner lifting in mixed radix. Throws std::invalid_argument
// if the vector is misaligned with the basis or a residue is out of range.
mpz_class crt_reconstruct(const ResidueVector& rv, const PrimeBasis& basis);

// t_i = N mod p_i. Inverse of crt_reconstruct on [0, prod p_i).
ResidueVector reduce(const mpz_class& value, const PrimeBasis& basis);

}  // namespace areawalk
