#ifndef MTZ_COMPLEXVAL_HPP
#define MTZ_COMPLEXVAL_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace mtz {

using Cplx = std::complex<double>;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// sin(pi x), cos(pi x) with argument reduction against exact integers, so
// that sinpi(n) == 0 and cospi(n) == +-1 exactly for integer n. This is what
// makes phase factors like e^{i pi s} and reflection-formula zeros exact on
// the integer lattice.
inline double sinpi(double x) {
    double r = std::remainder(x, 2.0); // r in [-1, 1], exact for integer x
    double a = std::fabs(r);
    double s;
    if (a <= 0.5)
        s = std::sin(M_PI * a);
    else
        s = std::sin(M_PI * (1.0 - a)); // 1 - a is exact here
    return r < 0.0 ? -s : s;
}

inline double cospi(double x) { return sinpi(0.5 - x); }

inline Cplx sinpi(const Cplx& z) {
    double x = z.real(), y = z.imag();
    if (y == 0.0) return {sinpi(x), 0.0};
    return {sinpi(x) * std::cosh(M_PI * y), cospi(x) * std::sinh(M_PI * y)};
}

inline Cplx cospi(const Cplx& z) {
    double x = z.real(), y = z.imag();
    if (y == 0.0) return {cospi(x), 0.0};
    return {cospi(x) * std::cosh(M_PI * y), -sinpi(x) * std::sinh(M_PI * y)};
}

// e^{i pi z}; exactly +-1 at real even/odd integers.
inline Cplx exp_i_pi(const Cplx& z) {
    double damp = std::exp(-M_PI * z.imag());
    return {damp * cospi(z.real()), damp * sinpi(z.real())};
}

// Complex number with an attached absolute-error estimate. Error bounds are
// propagated (summed, never dropped) through arithmetic; first-order terms
// plus a representation ulp.
struct ComplexValue {
    Cplx v{0.0, 0.0};
    double err = 0.0;

    ComplexValue() = default;
    ComplexValue(Cplx value, double e = 0.0) : v(value), err(e) {}
    ComplexValue(double re, double im = 0.0, double e = 0.0) : v(re, im), err(e) {}

    double re() const { return v.real(); }
    double im() const { return v.imag(); }

    ComplexValue& operator+=(const ComplexValue& o) {
        v += o.v;
        err += o.err + kEps * std::abs(v);
        return *this;
    }
    ComplexValue& operator-=(const ComplexValue& o) {
        v -= o.v;
        err += o.err + kEps * std::abs(v);
        return *this;
    }
    ComplexValue& operator*=(const ComplexValue& o) {
        double ma = std::abs(v), mb = std::abs(o.v);
        err = ma * o.err + mb * err + err * o.err + kEps * ma * mb;
        v *= o.v;
        return *this;
    }
    ComplexValue& operator/=(const ComplexValue& o) {
        double ma = std::abs(v), mb = std::abs(o.v);
        v /= o.v;
        err = (err + (ma / mb) * o.err) / mb + kEps * std::abs(v);
        return *this;
    }

    friend ComplexValue operator+(ComplexValue a, const ComplexValue& b) { return a += b; }
    friend ComplexValue operator-(ComplexValue a, const ComplexValue& b) { return a -= b; }
    friend ComplexValue operator*(ComplexValue a, const ComplexValue& b) { return a *= b; }
    friend ComplexValue operator/(ComplexValue a, const ComplexValue& b) { return a /= b; }
    friend ComplexValue operator-(ComplexValue a) { a.v = -a.v; return a; }
};

} // namespace mtz

#endif
