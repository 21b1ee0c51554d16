#include "mtz/finite.hpp"

#include "mtz/errors.hpp"
#include "mtz/kernels.hpp"
#include "mtz/util.hpp"

#include <algorithm>

namespace mtz {

namespace {
constexpr uint32_t kMaxPrime = 2'000'000; // keeps p^3 < 2^64 for deferred reduction
}

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> primes_in_range(uint32_t lo, uint32_t hi) {
    std::vector<uint32_t> out;
    if (hi < 2) return out;
    std::vector<bool> comp(hi + 1, false);
    for (uint32_t i = 2; static_cast<uint64_t>(i) * i <= hi; ++i)
        if (!comp[i])
            for (uint64_t j = static_cast<uint64_t>(i) * i; j <= hi; j += i) comp[j] = true;
    for (uint32_t n = std::max<uint32_t>(lo, 2); n <= hi; ++n)
        if (!comp[n]) out.push_back(n);
    return out;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
    uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

namespace {

void require_prime(uint32_t p) {
    if (p > kMaxPrime || !is_prime_u32(p))
        throw NonPrimeModulus("modulus is not a (supported) prime: " + std::to_string(p));
}

// x^{-k} mod p for a single x; handles x == 0 mod p before Fermat reduction.
uint32_t pow_residue(uint32_t x, long k, uint32_t p) {
    if (x % p == 0) {
        if (k > 0) throw InverseOfZero("inverse of 0 mod " + std::to_string(p));
        return k == 0 ? 1u % p : 0u;
    }
    long e = -k % static_cast<long>(p - 1);
    if (e < 0) e += p - 1;
    return static_cast<uint32_t>(pow_mod(x, static_cast<uint64_t>(e), p));
}

} // namespace

std::vector<uint32_t> power_table(long k, uint32_t p, uint32_t len) {
    std::vector<uint32_t> t(static_cast<size_t>(len) + 1, 0);
    for (uint32_t x = 1; x <= len; ++x) t[x] = pow_residue(x, k, p);
    return t;
}

uint32_t harmonic_sum_mod_p(const IndexTuple& k, uint32_t n, uint32_t p) {
    require_prime(p);
    const size_t r = k.size();
    if (r == 0) return 1 % p; // unit index
    std::vector<std::vector<uint32_t>> tables(r);
    for (size_t i = 0; i < r; ++i) tables[i] = power_table(k[i], p, n);
    std::vector<uint64_t> dp(r + 1, 0);
    dp[0] = 1;
    for (uint32_t t = 1; t <= n; ++t) {
        for (size_t i = r; i >= 1; --i)
            dp[i] = (dp[i] + dp[i - 1] * tables[i - 1][t]) % p;
    }
    return static_cast<uint32_t>(dp[r]);
}

namespace {

// sum over n_1 + n_2 = total (n_i >= 1) of T1[n_1] T2[n_2] via the u32 dot
// kernel on T1 ascending against T2 descending.
uint32_t pair_conv(const std::vector<uint32_t>& t1, const std::vector<uint32_t>& t2rev,
                   uint32_t total, uint32_t p) {
    if (total < 2) return 0;
    // t2rev[j] = T2[p-1-j]; T2[total-1-i] = t2rev[p-total+i]
    uint64_t s = kernels::dot_u32(t1.data() + 1, t2rev.data() + (p - total), total - 1);
    return static_cast<uint32_t>(s % p);
}

uint32_t omega_rec(const std::vector<std::vector<uint32_t>>& tables,
                   const std::vector<uint32_t>& lastrev, size_t i, uint32_t total, uint32_t p) {
    const size_t r = tables.size();
    if (i + 2 == r) return pair_conv(tables[i], lastrev, total, p);
    uint64_t acc = 0;
    uint32_t parts_left = static_cast<uint32_t>(r - i - 1);
    for (uint32_t n = 1; n + parts_left <= total; ++n) {
        acc += static_cast<uint64_t>(tables[i][n]) *
               omega_rec(tables, lastrev, i + 1, total - n, p);
        if ((n & 1023u) == 0) acc %= p;
    }
    return static_cast<uint32_t>(acc % p);
}

} // namespace

uint32_t omega_sum_mod_p(const IndexTuple& k, uint32_t p) {
    require_prime(p);
    const size_t r = k.size();
    if (r < 2) throw Error("omega sum requires depth >= 2");
    std::vector<std::vector<uint32_t>> tables(r);
    for (size_t i = 0; i < r; ++i) tables[i] = power_table(k[i], p, p - 1);
    // reversed copy of the last table for contiguous dot products
    std::vector<uint32_t> lastrev(p, 0);
    for (uint32_t j = 0; j + 1 < p; ++j) lastrev[j] = tables[r - 1][p - 1 - j];
    return omega_rec(tables, lastrev, 0, p, p);
}

PrimeResidueVector omega_a(const IndexTuple& k, uint32_t primes_up_to) {
    if (k.size() != 3) throw Error("omega_a expects a depth-3 index");
    auto primes = primes_in_range(5, primes_up_to);
    PrimeResidueVector out;
    out.entries.resize(primes.size());
    parallel_for(primes.size(), [&](size_t i) {
        out.entries[i] = {primes[i], omega_sum_mod_p(k, primes[i])};
    });
    return out;
}

uint32_t zeta_a_depth2(long k1, long k2, uint32_t p) {
    require_prime(p);
    return harmonic_sum_mod_p({k1, k2}, p - 1, p);
}

bool binomial_reduction_check(long k1, long k2, long k3, uint32_t p) {
    require_prime(p);
    if (k1 > 0 || k2 > 0 || k3 > 0) throw Error("binomial reduction needs non-positive indices");
    const uint32_t lhs = omega_sum_mod_p({k1, k2, k3}, p);

    const unsigned q = static_cast<unsigned>(-k2);
    if (q >= p) throw Error("binomial reduction needs |k2| < p");
    uint64_t acc = 0;
    // C(q, l) incrementally; q stays desk-scale so uint64 is exact until the
    // mod, and we reduce every step anyway.
    for (unsigned l = 0; l <= q; ++l) {
        uint64_t binom_mod = 1;
        {
            // C(q, l) mod p by factorial-free product
            uint64_t num = 1, den = 1;
            for (unsigned i = 0; i < l; ++i) {
                num = num * ((q - i) % p) % p;
                den = den * ((i + 1) % p) % p;
            }
            binom_mod = num * pow_mod(den, p - 2, p) % p;
        }
        uint64_t z = zeta_a_depth2(k1 + k2 + static_cast<long>(l), k3 - static_cast<long>(l), p);
        uint64_t term = binom_mod * z % p;
        if (l % 2 == 1) term = (p - term) % p;
        acc = (acc + term) % p;
    }
    if ((static_cast<unsigned>(-k2 - k3)) % 2 == 1) acc = (p - acc) % p;
    return lhs == static_cast<uint32_t>(acc);
}

PatternSummary zero_one_pattern(const IndexTuple& k, const PrimeResidueVector& v) {
    PatternSummary s;
    long abs_sum = 0;
    bool nonpos = true, all_zero = true;
    for (long ki : k) {
        if (ki > 0) nonpos = false;
        if (ki != 0) all_zero = false;
        abs_sum += ki < 0 ? -ki : ki;
    }
    s.applicable = nonpos;
    if (!nonpos) return s;
    s.expected = all_zero ? 1 : 0;
    s.threshold = all_zero ? 0 : static_cast<uint32_t>(abs_sum + 3);
    s.holds = true;
    for (const auto& [p, res] : v.entries)
        if (p > s.threshold && res != s.expected) s.holds = false;
    return s;
}

} // namespace mtz
