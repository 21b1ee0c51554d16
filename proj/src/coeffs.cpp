#include "mtz/coeffs.hpp"

#include "mtz/bernoulli.hpp"
#include "mtz/errors.hpp"

namespace mtz {

Rational b_coeff(unsigned m1, unsigned m2, unsigned m3) {
    unsigned m = m1 + m2 + m3 + 2;
    Rational r = rat(factorial(m1) * factorial(m2) * factorial(m3) * binomial_uu(m - 1, m3),
                     factorial(m));
    return r * bernoulli(m);
}

Rational c_coeff(unsigned m1, unsigned m2, unsigned m3) {
    Rational acc = rat(0);
    for (unsigned n1 = 0; n1 <= m3; ++n1) {
        unsigned n2 = m3 - n1;
        Rational t = rat(binomial_uu(m3, n1), Int(1));
        t *= bernoulli(m1 + n1 + 1) / rat(m1 + n1 + 1);
        t *= bernoulli(m2 + n2 + 1) / rat(m2 + n2 + 1);
        acc += t;
    }
    return acc;
}

namespace {
inline int sign_pm(unsigned k) { return (k % 2 == 0) ? 1 : -1; }
}

Rational structural_sum(unsigned m1, unsigned m2, unsigned m3) {
    const unsigned m[3] = {m1, m2, m3};
    Rational acc = rat(0);
    for (unsigned j = 0; j < 3; ++j) {
        unsigned a = m[j % 3], b = m[(j + 1) % 3], c = m[(j + 2) % 3];
        acc += rat(sign_pm(a + b)) * b_coeff(a, b, c);
        acc += rat(sign_pm(c)) * c_coeff(a, b, c);
    }
    return acc;
}

Cplx asymptotic_model(unsigned m1, unsigned m2, unsigned m3, Cplx e1, Cplx e2, Cplx e3) {
    if (e2 + e3 == Cplx(0.0, 0.0) || e1 + e3 == Cplx(0.0, 0.0))
        throw DegenerateDirection("asymptotic_model: a pairwise sum of the offsets vanishes");
    Cplx t1 = static_cast<double>(sign_pm(m2)) * to_double(b_coeff(m2, m3, m1)) * e3 / (e2 + e3);
    Cplx t2 = static_cast<double>(sign_pm(m1)) * to_double(b_coeff(m3, m1, m2)) * e3 / (e1 + e3);
    return t1 + t2 + to_double(c_coeff(m1, m2, m3));
}

Cplx signed_binomial(long m, Cplx eps, unsigned k) {
    return binomial_cplx(Cplx(static_cast<double>(m), 0.0) - eps, k);
}

} // namespace mtz
