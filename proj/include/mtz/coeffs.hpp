#ifndef MTZ_COEFFS_HPP
#define MTZ_COEFFS_HPP

#include "mtz/complexval.hpp"
#include "mtz/rational.hpp"

namespace mtz {

// Exact rational coefficients of the asymptotic expansion of the
// Mordell-Tornheim double zeta around non-positive integer points, with
// m = m1 + m2 + m3 + 2 and B the Bernoulli numbers in the B_1 = +1/2
// convention:
//   b(m1,m2;m3) = m1! m2! m3! C(m-1, m3) B_m / m!
//   c(m1,m2;m3) = sum_{n1+n2=m3} C(m3,n1) B_{m1+n1+1}/(m1+n1+1) B_{m2+n2+1}/(m2+n2+1)
Rational b_coeff(unsigned m1, unsigned m2, unsigned m3);
Rational c_coeff(unsigned m1, unsigned m2, unsigned m3);

// Cyclic signed combination of b and c; equals 1 at (0,0,0) and 0 elsewhere.
Rational structural_sum(unsigned m1, unsigned m2, unsigned m3);

// Leading asymptotic model of zeta_MT(-m1+e1, -m2+e2; -m3+e3):
//   (-1)^{m2} b(m2,m3;m1) e3/(e2+e3) + (-1)^{m1} b(m3,m1;m2) e3/(e1+e3) + c(m1,m2;m3)
// Throws DegenerateDirection if e2+e3 or e1+e3 vanishes.
Cplx asymptotic_model(unsigned m1, unsigned m2, unsigned m3, Cplx e1, Cplx e2, Cplx e3);

// binom(m - eps, k) evaluated exactly as a polynomial in eps (product form).
Cplx signed_binomial(long m, Cplx eps, unsigned k);

// binom(z, k) for complex z, product form.
inline Cplx binomial_cplx(Cplx z, unsigned k) {
    Cplx p{1.0, 0.0};
    for (unsigned i = 0; i < k; ++i) p *= (z - static_cast<double>(i));
    double f = 1.0;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return p / f;
}

} // namespace mtz

#endif
