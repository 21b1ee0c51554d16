#include "mtz/series.hpp"

#include "mtz/bernoulli.hpp"
#include "mtz/errors.hpp"

#include <random>

namespace mtz {

// ---------------------------------------------------------------- TriSeries

TriSeries::TriSeries(unsigned N) : N_(N) {
    size_t count = static_cast<size_t>(N + 1) * (N + 2) * (N + 3) / 6;
    a_.assign(count, rat(0));
}

size_t TriSeries::idx(unsigned i, unsigned j, unsigned k) const {
    // layer i holds pairs (j,k) with j+k <= N-i, row-major in j
    size_t base = 0;
    for (unsigned p = 0; p < i; ++p) {
        unsigned m = N_ - p;
        base += static_cast<size_t>(m + 1) * (m + 2) / 2;
    }
    unsigned M = N_ - i;
    return base + static_cast<size_t>(j) * (M + 1) - static_cast<size_t>(j) * (j - 1) / 2 + k;
}

const Rational& TriSeries::at(unsigned i, unsigned j, unsigned k) const { return a_[idx(i, j, k)]; }

void TriSeries::add_at(unsigned i, unsigned j, unsigned k, const Rational& v) {
    if (i + j + k > N_) return;
    a_[idx(i, j, k)] += v;
}

void TriSeries::set_at(unsigned i, unsigned j, unsigned k, const Rational& v) {
    if (i + j + k > N_) return;
    a_[idx(i, j, k)] = v;
}

TriSeries& TriSeries::operator+=(const TriSeries& o) {
    for (size_t n = 0; n < a_.size(); ++n) a_[n] += o.a_[n];
    return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& o) {
    for (size_t n = 0; n < a_.size(); ++n) a_[n] -= o.a_[n];
    return *this;
}

TriSeries TriSeries::operator*(const TriSeries& o) const {
    TriSeries out(N_);
    // skip zero coefficients; exact truncation at the bound
    for (unsigned i = 0; i <= N_; ++i)
        for (unsigned j = 0; i + j <= N_; ++j)
            for (unsigned k = 0; i + j + k <= N_; ++k) {
                const Rational& x = at(i, j, k);
                if (x == 0) continue;
                unsigned rem = N_ - i - j - k;
                for (unsigned p = 0; p <= rem; ++p)
                    for (unsigned q = 0; p + q <= rem; ++q)
                        for (unsigned r = 0; p + q + r <= rem; ++r) {
                            const Rational& y = o.at(p, q, r);
                            if (y == 0) continue;
                            out.a_[out.idx(i + p, j + q, k + r)] += x * y;
                        }
            }
    return out;
}

bool TriSeries::operator==(const TriSeries& o) const { return N_ == o.N_ && a_ == o.a_; }

TriSeries TriSeries::cycled() const {
    TriSeries out(N_);
    for_each([&](unsigned i, unsigned j, unsigned k, const Rational& v) {
        if (v != 0) out.set_at(k, i, j, v);
    });
    return out;
}

TriSeries TriSeries::substitute_t1_eq_t2() const {
    TriSeries out(N_);
    for_each([&](unsigned i, unsigned j, unsigned k, const Rational& v) {
        if (v != 0) out.add_at(0, i + j, k, v);
    });
    return out;
}

bool TriSeries::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool TriSeries::is_constant(const Rational& v) const {
    bool ok = (at(0, 0, 0) == v);
    for_each([&](unsigned i, unsigned j, unsigned k, const Rational& c) {
        if (i + j + k > 0 && c != 0) ok = false;
    });
    return ok;
}

// ------------------------------------------------------------------- Poly2

Poly2 Poly2::constant(const Rational& v) { return monomial(0, 0, v); }

Poly2 Poly2::monomial(unsigned i, unsigned j, const Rational& v) {
    Poly2 p;
    if (v != 0) p.t_[{i, j}] = v;
    return p;
}

void Poly2::trim() {
    for (auto it = t_.begin(); it != t_.end();)
        it = (it->second == 0) ? t_.erase(it) : std::next(it);
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [m, v] : o.t_) t_[m] += v;
    trim();
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [m, v] : o.t_) t_[m] -= v;
    trim();
    return *this;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (const auto& [m, v] : t_)
        for (const auto& [n, w] : o.t_) out.t_[{m.first + n.first, m.second + n.second}] += v * w;
    out.trim();
    return out;
}

bool Poly2::is_zero() const { return t_.empty(); }

Rational Poly2::eval(const Rational& x, const Rational& y) const {
    Rational acc = rat(0);
    for (const auto& [m, v] : t_) {
        Rational term = v;
        for (unsigned i = 0; i < m.first; ++i) term *= x;
        for (unsigned j = 0; j < m.second; ++j) term *= y;
        acc += term;
    }
    return acc;
}

RationalFunction2 RationalFunction2::operator+(const RationalFunction2& o) const {
    return {num * o.den + o.num * den, den * o.den};
}

RationalFunction2 RationalFunction2::operator*(const RationalFunction2& o) const {
    return {num * o.num, den * o.den};
}

bool RationalFunction2::equals_one() const {
    Poly2 d = num;
    d -= den;
    return d.is_zero();
}

// ----------------------------------------------------------- named series

UniSeries beta_series(unsigned N) {
    UniSeries s;
    s.degree_bound = N;
    s.c.resize(N + 1);
    for (unsigned k = 0; k <= N; ++k) s.c[k] = bernoulli(k + 1) / rat(factorial(k + 1), Int(1));
    return s;
}

namespace {

// Adds coeff * (t3 - tp)^a (t3 - tq)^b to out, where tp/tq name t1 or t2 by
// index (1 or 2).
void add_prod_of_differences(TriSeries& out, const Rational& coeff, unsigned a, unsigned p,
                             unsigned b, unsigned q) {
    for (unsigned al = 0; al <= a; ++al) {
        Rational ca = rat(binomial_uu(a, al), Int(1)) * ((a - al) % 2 == 0 ? rat(1) : rat(-1));
        for (unsigned be = 0; be <= b; ++be) {
            Rational cb = rat(binomial_uu(b, be), Int(1)) * ((b - be) % 2 == 0 ? rat(1) : rat(-1));
            // monomial t_p^{a-al} t_q^{b-be} t3^{al+be}
            unsigned e1 = 0, e2 = 0;
            if (p == 1) e1 += a - al; else e2 += a - al;
            if (q == 1) e1 += b - be; else e2 += b - be;
            out.add_at(e1, e2, al + be, coeff * ca * cb);
        }
    }
}

} // namespace

TriSeries series_B(unsigned N) {
    TriSeries out(N);
    UniSeries beta = beta_series(N + 1);
    // (x^k - y^k)/(x - y) = sum_{a+b=k-1} x^a y^b with x = t3-t2, y = t3-t1
    for (unsigned k = 1; k <= N + 1; ++k) {
        if (beta.c[k] == 0) continue;
        for (unsigned a = 0; a + 1 <= k; ++a) {
            unsigned b = k - 1 - a;
            add_prod_of_differences(out, beta.c[k], a, 2, b, 1);
        }
    }
    return out;
}

namespace {

// beta(t_p - t3) as a trivariate series.
TriSeries beta_of_difference(unsigned N, unsigned p) {
    TriSeries out(N);
    UniSeries beta = beta_series(N);
    for (unsigned k = 0; k <= N; ++k) {
        if (beta.c[k] == 0) continue;
        for (unsigned al = 0; al <= k; ++al) {
            Rational c = rat(binomial_uu(k, al), Int(1)) * ((k - al) % 2 == 0 ? rat(1) : rat(-1));
            // t_p^al * t3^{k-al} with sign from (-t3)
            unsigned e1 = (p == 1) ? al : 0, e2 = (p == 2) ? al : 0;
            out.add_at(e1, e2, k - al, beta.c[k] * c);
        }
    }
    return out;
}

} // namespace

TriSeries series_C(unsigned N) { return beta_of_difference(N, 1) * beta_of_difference(N, 2); }

TriSeries cyclic_sum_check(unsigned N) {
    TriSeries bc = series_B(N);
    bc += series_C(N);
    TriSeries rot1 = bc.cycled();
    TriSeries rot2 = rot1.cycled();
    bc += rot1;
    bc += rot2;
    return bc;
}

bool partial_fraction_identity_check(unsigned samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);

    for (unsigned s = 0; s < samples; ++s) {
        Rational t[3];
        while (true) {
            for (auto& x : t) x = rat(num(rng), den(rng));
            if (t[0] != t[1] && t[1] != t[2] && t[0] != t[2]) break; // degenerate draw: redraw
        }
        Rational acc = rat(0);
        for (unsigned j = 0; j < 3; ++j) {
            const Rational& u1 = t[j % 3];
            const Rational& u2 = t[(j + 1) % 3];
            const Rational& u3 = t[(j + 2) % 3];
            acc += rat(1) / ((u1 - u2) * (u3 - u2));
        }
        if (acc != 0) return false;
    }

    // Symbolic route. With independent x, y, z: clearing denominators of
    // -1/(xy) - 1/(yz) - 1/(zx) against xyz leaves -(z + x + y).
    TriSeries lhs(2), rhs(2);
    lhs.add_at(0, 0, 1, rat(-1)); // -z  from -1/(xy) * xyz
    lhs.add_at(1, 0, 0, rat(-1)); // -x  from -1/(yz) * xyz
    lhs.add_at(0, 1, 0, rat(-1)); // -y  from -1/(zx) * xyz
    rhs.add_at(1, 0, 0, rat(-1));
    rhs.add_at(0, 1, 0, rat(-1));
    rhs.add_at(0, 0, 1, rat(-1));
    if (!(lhs == rhs)) return false;

    // And the pair differences x = t1-t2, y = t2-t3, z = t3-t1 sum to the
    // zero polynomial, which kills the numerator.
    TriSeries xyz_sum(1);
    xyz_sum.add_at(1, 0, 0, rat(1));
    xyz_sum.add_at(0, 1, 0, rat(-1)); // x = t1 - t2
    xyz_sum.add_at(0, 1, 0, rat(1));
    xyz_sum.add_at(0, 0, 1, rat(-1)); // y = t2 - t3
    xyz_sum.add_at(0, 0, 1, rat(1));
    xyz_sum.add_at(1, 0, 0, rat(-1)); // z = t3 - t1
    return xyz_sum.is_zero();
}

bool exponential_identity_check() {
    const Poly2 one = Poly2::constant(rat(1));
    const Poly2 X = Poly2::monomial(1, 0, rat(1));
    const Poly2 Y = Poly2::monomial(0, 1, rat(1));
    const Poly2 XY = X * Y;

    RationalFunction2 term0{XY * Y, (XY - one) * (Y - one)};
    RationalFunction2 term1{one, (one - X) * (one - XY)};
    RationalFunction2 term2{X, (one - Y) * (X - one)};

    RationalFunction2 sum = term0 + term1 + term2;
    if (!sum.equals_one()) return false;

    // rational spot checks of the reduced terms
    auto eval_sum = [&](const Rational& x, const Rational& y) -> Rational {
        Rational t0 = (x * y * y) / ((x * y - 1) * (y - 1));
        Rational t1 = rat(1) / ((rat(1) - x) * (rat(1) - x * y));
        Rational t2 = x / ((rat(1) - y) * (x - 1));
        return t0 + t1 + t2;
    };
    if (eval_sum(rat(2), rat(3)) != 1) return false;
    if (eval_sum(rat(1, 5), rat(-2)) != 1) return false;
    return true;
}

} // namespace mtz
