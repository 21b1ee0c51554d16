#ifndef MTZ_FINITE_HPP
#define MTZ_FINITE_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace mtz {

// Index tuple (k_1, ..., k_r), any signs; the empty tuple is the unit index.
using IndexTuple = std::vector<long>;

// Finite truncation of an element of the residue-vector ring: residues of one
// quantity at an increasing list of primes.
struct PrimeResidueVector {
    std::vector<std::pair<uint32_t, uint32_t>> entries;
};

bool is_prime_u32(uint32_t n);
std::vector<uint32_t> primes_in_range(uint32_t lo, uint32_t hi);

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);

// x^{-k} mod p for x in [1, len], with x = 0 column unused. Negative k means
// positive powers; inverses via Fermat exponentiation.
std::vector<uint32_t> power_table(long k, uint32_t p, uint32_t len);

// H_n(k) = sum_{1<=n_1<...<n_r<=n} prod n_i^{-k_i} mod p.
uint32_t harmonic_sum_mod_p(const IndexTuple& k, uint32_t n, uint32_t p);

// omega_p(k) = sum_{n_1+...+n_r=p, n_i>=1} prod n_i^{-k_i} mod p, r >= 2.
uint32_t omega_sum_mod_p(const IndexTuple& k, uint32_t p);

// Per-prime residues of omega_p(k) for all primes 5 <= p <= primes_up_to.
PrimeResidueVector omega_a(const IndexTuple& k, uint32_t primes_up_to);

// sum_{1<=n_1<n_2<=p-1} n_1^{-k_1} n_2^{-k_2} mod p.
uint32_t zeta_a_depth2(long k1, long k2, uint32_t p);

// Verifies omega_p(k1,k2,k3) = (-1)^{-k2-k3} sum_{l=0}^{-k2} (-1)^l C(-k2,l)
// zeta_A(k1+k2+l, k3-l) mod p for non-positive k.
bool binomial_reduction_check(long k1, long k2, long k3, uint32_t p);

// The non-positive-index residue pattern: 1 at every prime for k = (0,0,0),
// 0 at every prime p > sum|k_i| + 3 otherwise.
struct PatternSummary {
    bool applicable = false; // all k_i <= 0
    uint32_t expected = 0;
    uint32_t threshold = 0;  // guard: assertions apply to p > threshold
    bool holds = false;
};
PatternSummary zero_one_pattern(const IndexTuple& k, const PrimeResidueVector& v);

} // namespace mtz

#endif
