#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtz/errors.hpp"
#include "mtz/finite.hpp"
#include "mtz/rational.hpp"

#include <random>

using namespace mtz;

namespace {

// Exact-rational oracle for H_n(k) on small n, reduced mod p.
uint32_t harmonic_oracle(const IndexTuple& k, uint32_t n, uint32_t p) {
    const size_t r = k.size();
    std::vector<Rational> dp(r + 1, rat(0));
    dp[0] = rat(1);
    for (uint32_t t = 1; t <= n; ++t)
        for (size_t i = r; i >= 1; --i) {
            Rational f = rat(1);
            long ki = k[i - 1];
            for (long e = 0; e < (ki < 0 ? -ki : ki); ++e) f *= rat(static_cast<long>(t));
            if (ki >= 0)
                dp[i] += dp[i - 1] / f;
            else
                dp[i] += dp[i - 1] * f;
        }
    Rational h = dp[r];
    // reduce a/b mod p
    Int num = h.get_num(), den = h.get_den();
    Int pp(static_cast<long>(p));
    Int nm = num % pp, dm = den % pp;
    if (nm < 0) nm += pp;
    uint64_t inv = pow_mod(dm.get_ui(), p - 2, p);
    return static_cast<uint32_t>(nm.get_ui() * inv % p);
}

// Brute-force omega_p by direct composition enumeration.
uint32_t omega_oracle(const IndexTuple& k, uint32_t p) {
    const size_t r = k.size();
    std::vector<std::vector<uint32_t>> t(r);
    for (size_t i = 0; i < r; ++i) t[i] = power_table(k[i], p, p - 1);
    uint64_t acc = 0;
    if (r == 2) {
        for (uint32_t a = 1; a < p; ++a) acc = (acc + static_cast<uint64_t>(t[0][a]) * t[1][p - a]) % p;
    } else if (r == 3) {
        for (uint32_t a = 1; a + 2 <= p; ++a)
            for (uint32_t b = 1; a + b + 1 <= p; ++b)
                acc = (acc + static_cast<uint64_t>(t[0][a]) * t[1][b] % p * t[2][p - a - b]) % p;
    }
    return static_cast<uint32_t>(acc);
}

} // namespace

TEST_CASE("primality and sieve") {
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(293));
    CHECK(!is_prime_u32(1));
    CHECK(!is_prime_u32(299)); // 13 * 23
    auto ps = primes_in_range(5, 30);
    CHECK(ps == std::vector<uint32_t>{5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("harmonic sums mod p") {
    CHECK(harmonic_sum_mod_p({1}, 4, 7) == 5); // H_4 = 25/12
    CHECK(harmonic_sum_mod_p({}, 9, 11) == 1); // unit index
    CHECK(harmonic_sum_mod_p({1}, 12, 13) == 0);
    CHECK_THROWS_AS((void)harmonic_sum_mod_p({1}, 3, 8), NonPrimeModulus);
    CHECK_THROWS_AS((void)harmonic_sum_mod_p({2}, 13, 13), InverseOfZero);

    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> kd(-3, 3);
    std::uniform_int_distribution<uint32_t> nd(1, 12);
    for (int rep = 0; rep < 50; ++rep) {
        size_t r = 1 + rep % 3;
        IndexTuple k(r);
        for (auto& x : k) x = kd(rng);
        uint32_t n = nd(rng);
        for (uint32_t p : {13u, 17u, 101u})
            CHECK(harmonic_sum_mod_p(k, n, p) == harmonic_oracle(k, n, p));
    }
}

TEST_CASE("omega sums mod p, spec'd examples") {
    CHECK(omega_sum_mod_p({0, 0, 0}, 11) == 1);  // C(10,2) = 45
    CHECK(omega_sum_mod_p({-1, 0, 0}, 11) == 0);
    CHECK(omega_sum_mod_p({1, 1, 1}, 5) == 3);
    CHECK_THROWS_AS((void)omega_sum_mod_p({1}, 11), Error);
}

TEST_CASE("omega sum equals brute-force enumeration") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> kd(-3, 2);
    for (uint32_t p : {5u, 7u, 11u, 19u, 37u, 53u}) {
        for (int rep = 0; rep < 12; ++rep) {
            IndexTuple k3{kd(rng), kd(rng), kd(rng)};
            CHECK(omega_sum_mod_p(k3, p) == omega_oracle(k3, p));
            IndexTuple k2{kd(rng), kd(rng)};
            CHECK(omega_sum_mod_p(k2, p) == omega_oracle(k2, p));
        }
    }
}

TEST_CASE("omega sum is symmetric under index permutation") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> kd(-4, 3);
    for (int rep = 0; rep < 20; ++rep) {
        IndexTuple k{kd(rng), kd(rng), kd(rng)};
        uint32_t p = 53;
        uint32_t base = omega_sum_mod_p(k, p);
        CHECK(base == omega_sum_mod_p({k[1], k[2], k[0]}, p));
        CHECK(base == omega_sum_mod_p({k[2], k[0], k[1]}, p));
        CHECK(base == omega_sum_mod_p({k[1], k[0], k[2]}, p));
    }
}

TEST_CASE("omega sum equals the depth-2 convolution form") {
    // sum_{m2=2}^{p-1} sum_{m1<m2} m1^{-k1} (m2-m1)^{-k2} (-m2)^{-k3}
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> kd(-4, 0);
    for (uint32_t p : {7u, 11u, 13u, 53u, 101u}) {
        for (int rep = 0; rep < 8; ++rep) {
            IndexTuple k{kd(rng), kd(rng), kd(rng)};
            auto t1 = power_table(k[0], p, p - 1);
            auto t2 = power_table(k[1], p, p - 1);
            auto t3 = power_table(k[2], p, p - 1);
            uint64_t acc = 0;
            for (uint32_t m2 = 2; m2 < p; ++m2) {
                uint64_t inner = 0;
                for (uint32_t m1 = 1; m1 < m2; ++m1)
                    inner = (inner + static_cast<uint64_t>(t1[m1]) * t2[m2 - m1]) % p;
                uint64_t neg = pow_mod(p - m2, static_cast<uint64_t>((-k[2]) % (p - 1) + (p - 1)) % (p - 1), p);
                acc = (acc + inner * neg) % p;
            }
            CHECK(omega_sum_mod_p(k, p) == static_cast<uint32_t>(acc));
        }
    }
}

TEST_CASE("zeta_A depth 2 examples") {
    CHECK(zeta_a_depth2(0, 0, 7) == 1); // C(6,2) = 15
    CHECK(zeta_a_depth2(-1, 0, 7) == 0);
    CHECK(zeta_a_depth2(1, 1, 7) == 0);
}

TEST_CASE("binomial reduction identity") {
    CHECK(binomial_reduction_check(0, 0, 0, 11));
    CHECK(binomial_reduction_check(-1, -2, 0, 13));
    CHECK(binomial_reduction_check(-3, -1, -2, 17));
    for (long a = -3; a <= 0; ++a)
        for (long b = -3; b <= 0; ++b)
            for (long c = -3; c <= 0; ++c)
                for (uint32_t p : {5u, 7u, 11u, 31u, 97u}) CHECK(binomial_reduction_check(a, b, c, p));
}

TEST_CASE("omega_a prime sweeps and the 0/1 pattern") {
    PrimeResidueVector v0 = omega_a({0, 0, 0}, 100);
    CHECK(v0.entries.size() == primes_in_range(5, 100).size());
    for (const auto& [p, r] : v0.entries) CHECK(r == 1);
    PatternSummary s0 = zero_one_pattern({0, 0, 0}, v0);
    CHECK(s0.applicable);
    CHECK(s0.holds);
    CHECK(s0.expected == 1);

    PrimeResidueVector v1 = omega_a({-1, 0, 0}, 100);
    for (const auto& [p, r] : v1.entries) CHECK(r == 0);
    CHECK(zero_one_pattern({-1, 0, 0}, v1).holds);

    PrimeResidueVector v2 = omega_a({-2, -2, -2}, 100);
    PatternSummary s2 = zero_one_pattern({-2, -2, -2}, v2);
    CHECK(s2.applicable);
    CHECK(s2.threshold == 9);
    CHECK(s2.holds);

    PatternSummary s3 = zero_one_pattern({1, 1, 1}, PrimeResidueVector{});
    CHECK(!s3.applicable);
}

TEST_CASE("pattern residues above threshold vanish for small non-positive indices") {
    for (long a = 0; a >= -2; --a)
        for (long b = 0; b >= -2; --b)
            for (long c = 0; c >= -2; --c) {
                if (a == 0 && b == 0 && c == 0) continue;
                PrimeResidueVector v = omega_a({a, b, c}, 60);
                PatternSummary s = zero_one_pattern({a, b, c}, v);
                CHECK(s.holds);
            }
}
