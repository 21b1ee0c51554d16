#ifndef MTZ_RATIONAL_HPP
#define MTZ_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace mtz {

// Exact arbitrary-precision arithmetic. mpq_class results of arithmetic are
// always canonical (denominator > 0, gcd(num, den) = 1); only fraction
// construction needs an explicit canonicalize, which rat() provides.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Int& num, const Int& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k) for non-negative n
inline Int binomial_uu(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// C(n, k) for any integer n: product form n(n-1)...(n-k+1)/k!
inline Rational binomial_any(long n, unsigned long k) {
    Int num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= Int(n) - Int(i);
    return rat(num, factorial(k));
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace mtz

#endif
