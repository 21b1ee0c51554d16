#ifndef MTZ_SERIES_HPP
#define MTZ_SERIES_HPP

#include "mtz/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace mtz {

// Truncated univariate power series over Rational.
struct UniSeries {
    unsigned degree_bound = 0;
    std::vector<Rational> c; // c[k] multiplies t^k, k <= degree_bound
};

// Truncated trivariate power series over Rational: coefficients on monomials
// t1^i t2^j t3^k with i+j+k <= N. Arithmetic never exceeds the bound.
class TriSeries {
public:
    explicit TriSeries(unsigned N);

    unsigned degree_bound() const { return N_; }
    const Rational& at(unsigned i, unsigned j, unsigned k) const;
    void add_at(unsigned i, unsigned j, unsigned k, const Rational& v);
    void set_at(unsigned i, unsigned j, unsigned k, const Rational& v);

    TriSeries& operator+=(const TriSeries& o);
    TriSeries& operator-=(const TriSeries& o);
    TriSeries operator*(const TriSeries& o) const;
    bool operator==(const TriSeries& o) const;

    // Variable rotation t1 -> t2 -> t3 -> t1 (series of F(t2, t3, t1)).
    TriSeries cycled() const;

    // Remainder of division by (t1 - t2), i.e. the substitution t1 = t2,
    // re-expressed in the same trivariate basis (t1-degree zero).
    TriSeries substitute_t1_eq_t2() const;

    bool is_zero() const;
    bool is_constant(const Rational& v) const;

    template <typename F>
    void for_each(F&& f) const { // f(i, j, k, coeff)
        for (unsigned i = 0; i <= N_; ++i)
            for (unsigned j = 0; i + j <= N_; ++j)
                for (unsigned k = 0; i + j + k <= N_; ++k) f(i, j, k, at(i, j, k));
    }

private:
    unsigned N_;
    std::vector<Rational> a_;
    size_t idx(unsigned i, unsigned j, unsigned k) const;
};

// Bivariate polynomial over Rational (sparse map), for the rational-function
// reduction of the exponential identity.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 constant(const Rational& v);
    static Poly2 monomial(unsigned i, unsigned j, const Rational& v); // X^i Y^j

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2 operator*(const Poly2& o) const;
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    bool is_zero() const;
    Rational eval(const Rational& x, const Rational& y) const;

private:
    std::map<std::pair<unsigned, unsigned>, Rational> t_;
    void trim();
};

// Rational function in two formal variables; denominator nonzero, reduced by
// rational content only.
struct RationalFunction2 {
    Poly2 num, den;
    RationalFunction2 operator+(const RationalFunction2& o) const;
    RationalFunction2 operator*(const RationalFunction2& o) const;
    bool equals_one() const;
};

// beta(t) = e^t/(e^t - 1) - 1/t = sum_k B_{k+1}/(k+1)! t^k.
UniSeries beta_series(unsigned N);

// Divided difference (beta(t3-t2) - beta(t3-t1))/(t1-t2) as a genuine
// trivariate series.
TriSeries series_B(unsigned N);

// beta(t1-t3) beta(t2-t3).
TriSeries series_C(unsigned N);

// sum over cyclic shifts of B + C; equals the constant series 1.
TriSeries cyclic_sum_check(unsigned N);

// sum_j 1/((t_{1+j}-t_{2+j})(t_{3+j}-t_{2+j})) = 0: exact evaluation at
// random rational triples with pairwise-distinct entries, plus the symbolic
// reduction -(x+y+z)/(xyz) with x+y+z = 0 for the pair differences.
bool partial_fraction_identity_check(unsigned samples, uint64_t seed = 42);

// sum_j E(t_{1+j}-t_{3+j}) E(t_{2+j}-t_{3+j}) = 1 with E(x) = e^x/(e^x-1),
// reduced to exact bivariate rational-function algebra via X = e^{t1-t2},
// Y = e^{t2-t3}.
bool exponential_identity_check();

} // namespace mtz

#endif
