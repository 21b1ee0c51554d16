#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtz/coeffs.hpp"
#include "mtz/series.hpp"

#include <random>

using namespace mtz;

TEST_CASE("beta series coefficients") {
    UniSeries b = beta_series(8);
    CHECK(b.c[0] == rat(1, 2));
    CHECK(b.c[1] == rat(1, 12));  // B_2/2!
    CHECK(b.c[2] == rat(0));      // B_3 = 0
    CHECK(b.c[3] == rat(-1, 720));
}

TEST_CASE("series_B spot coefficients") {
    TriSeries B = series_B(6);
    CHECK(B.at(0, 0, 0) == rat(1, 12));
    CHECK(B.at(0, 0, 1) == rat(0));
    CHECK(B.at(1, 1, 0) == rat(-1, 720));
}

TEST_CASE("series_C spot coefficients") {
    TriSeries C = series_C(6);
    CHECK(C.at(0, 0, 0) == rat(1, 4));
    CHECK(C.at(1, 0, 0) == rat(1, 24));
    CHECK(C.at(0, 0, 1) == rat(-1, 12)); // sign from (-t3)^{n1+n2}
}

TEST_CASE("series coefficients match b and c exactly") {
    const unsigned N = 10;
    TriSeries B = series_B(N), C = series_C(N);
    B.for_each([&](unsigned i, unsigned j, unsigned k, const Rational& v) {
        Rational fac = rat(factorial(i) * factorial(j) * factorial(k), Int(1));
        Rational sign = ((i + j) % 2 == 0) ? rat(1) : rat(-1);
        CHECK(v == sign * b_coeff(i, j, k) / fac);
    });
    C.for_each([&](unsigned i, unsigned j, unsigned k, const Rational& v) {
        Rational fac = rat(factorial(i) * factorial(j) * factorial(k), Int(1));
        Rational sign = (k % 2 == 0) ? rat(1) : rat(-1);
        CHECK(v == sign * c_coeff(i, j, k) / fac);
    });
}

TEST_CASE("divided-difference numerator is divisible by t1 - t2") {
    // remainder of division by (t1 - t2) is the substitution t1 = t2
    const unsigned N = 10;
    UniSeries beta = beta_series(N);
    TriSeries num(N);
    for (unsigned k = 0; k <= N; ++k) {
        if (beta.c[k] == 0) continue;
        // beta(t3 - t2) - beta(t3 - t1), expanded directly
        for (unsigned al = 0; al <= k; ++al) {
            Rational c = rat(binomial_uu(k, al), Int(1)) * ((k - al) % 2 == 0 ? rat(1) : rat(-1));
            num.add_at(0, k - al, al, beta.c[k] * c);  // (t3 - t2)^k term
            num.add_at(k - al, 0, al, -beta.c[k] * c); // -(t3 - t1)^k term
        }
    }
    CHECK(num.substitute_t1_eq_t2().is_zero());
}

TEST_CASE("cyclic sum is the constant series 1") {
    CHECK(cyclic_sum_check(0).is_constant(rat(1))); // 3*(1/12) + 3*(1/4) = 1
    CHECK(cyclic_sum_check(6).is_constant(rat(1)));
    CHECK(cyclic_sum_check(12).is_constant(rat(1)));
}

TEST_CASE("cyclic sum is invariant under variable rotation") {
    TriSeries s = cyclic_sum_check(8);
    CHECK(s == s.cycled());
}

TEST_CASE("TriSeries multiplication is commutative and associative under truncation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> numd(-5, 5);
    std::uniform_int_distribution<unsigned> deg(0, 5);
    auto random_sparse = [&](unsigned N) {
        TriSeries s(N);
        for (int t = 0; t < 8; ++t) {
            unsigned i = deg(rng), j = deg(rng), k = deg(rng);
            if (i + j + k <= N) s.add_at(i, j, k, rat(numd(rng), 1 + (t % 3)));
        }
        return s;
    };
    for (int rep = 0; rep < 20; ++rep) {
        TriSeries a = random_sparse(8), b = random_sparse(8), c = random_sparse(8);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("partial fraction identity") {
    // spec'd spot sample first: (1, 2, 4)
    Rational t1 = rat(1), t2 = rat(2), t3 = rat(4);
    Rational s = rat(1) / ((t1 - t2) * (t3 - t2)) + rat(1) / ((t2 - t3) * (t1 - t3)) +
                 rat(1) / ((t3 - t1) * (t2 - t1));
    CHECK(s == 0);
    Rational u1 = rat(0), u2 = rat(1, 2), u3 = rat(-3);
    Rational s2 = rat(1) / ((u1 - u2) * (u3 - u2)) + rat(1) / ((u2 - u3) * (u1 - u3)) +
                  rat(1) / ((u3 - u1) * (u2 - u1));
    CHECK(s2 == 0);
    CHECK(partial_fraction_identity_check(200));
}

TEST_CASE("exponential identity") { CHECK(exponential_identity_check()); }
