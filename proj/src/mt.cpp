#include "mtz/mt.hpp"

#include "mtz/bernoulli.hpp"
#include "mtz/coeffs.hpp"
#include "mtz/errors.hpp"
#include "mtz/kernels.hpp"
#include "mtz/special.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace mtz {

namespace {

inline Cplx npow(double n, Cplx s) { return std::exp(-s * std::log(n)); } // n^{-s}, n > 0

double fact_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binom_d(int n, int k) {
    double b = 1.0;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin zeta tail  Z(z, N) = sum_{n > N} n^{-z}
// ---------------------------------------------------------------------------

ComplexValue zeta_tail(Cplx z, double N) {
    Cplx Nm = npow(N, z);
    Cplx acc = Nm * N / (z - 1.0) - 0.5 * Nm;
    double mag = std::abs(acc);
    Cplx rise = z;
    Cplx Npw = Nm / N;
    double last = INFINITY, err = INFINITY;
    for (int k = 1; k <= 14; ++k) {
        if (k > 1) {
            rise *= (z + static_cast<double>(2 * k - 3)) * (z + static_cast<double>(2 * k - 2));
            Npw /= N * N;
        }
        Cplx term = bernoulli_d(static_cast<unsigned>(2 * k)) / fact_d(2 * k) * rise * Npw;
        double tm = std::abs(term);
        if (tm > last) { // asymptotic turn-around; stop before the term
            err = 2.0 * last;
            break;
        }
        acc += term;
        mag += tm;
        last = tm;
        err = 2.0 * tm;
        if (tm < 1e-22 * (1.0 + mag)) break;
    }
    return {acc, err + 8.0 * kEps * mag};
}

// ---------------------------------------------------------------------------
// G(alpha, c) = int_0^1 u^alpha (1+u)^{-c} du  (Re alpha > -1)
//
// Integration by parts gives the forward relation
//   G(alpha, c) = (2^{-c} + c G(alpha+1, c+1)) / (alpha + 1),
// iterated backward from a truncation depth where the integral is
// geometrically small.
// ---------------------------------------------------------------------------

ComplexValue G_int(Cplx alpha, Cplx c) {
    const int K = 120;
    Cplx g{0.0, 0.0};
    // |G(alpha+K, c+K)| <= 2^{-(Re alpha+K)} + 1.5^{-(Re c+K)}
    double err = std::pow(2.0, -(alpha.real() + K)) + std::pow(1.5, -(c.real() + K));
    Cplx tw = std::exp(-(c + static_cast<double>(K - 1)) * std::log(2.0)); // 2^{-c-k}
    for (int k = K - 1; k >= 0; --k) {
        Cplx denom = alpha + static_cast<double>(k + 1);
        g = (tw + (c + static_cast<double>(k)) * g) / denom;
        err = (err * std::abs(c + static_cast<double>(k)) + 4.0 * kEps * std::abs(g)) / std::abs(denom);
        if (k > 0) tw *= 2.0;
    }
    return {g, err};
}

// ---------------------------------------------------------------------------
// direct double summation with Euler-Maclaurin tails
// ---------------------------------------------------------------------------

struct TailAccum {
    Cplx v{0.0, 0.0};
    double err = 0.0;
    void add(const ComplexValue& t) {
        v += t.v;
        err += t.err;
    }
};

// one strip: sum_{small <= S} small^{-s_small} sum_{large > 2L} ... expanded
// binomially in small/large; Z_k are zeta tails at 2L.
ComplexValue strip_sum(const std::vector<Cplx>& small_pows, int S, Cplx s_large, Cplx s3, double L2,
                        double tol) {
    // P_k = sum_{x <= S} x^{k} * small_pows[x]
    std::vector<Cplx> w(small_pows.begin(), small_pows.begin() + S + 1);
    Cplx acc{0.0, 0.0};
    double err = 0.0, mag = 0.0;
    Cplx binom{1.0, 0.0}; // binom(-s3, k)
    double lastmag = INFINITY;
    for (int k = 0; k <= 96; ++k) {
        if (k > 0) {
            binom *= (-s3 - static_cast<double>(k - 1)) / static_cast<double>(k);
            for (int x = 1; x <= S; ++x) w[x] *= static_cast<double>(x);
        }
        Cplx Pk{0.0, 0.0};
        for (int x = 1; x <= S; ++x) Pk += w[x];
        ComplexValue Zk = zeta_tail(s_large + s3 + static_cast<double>(k), L2);
        Cplx term = binom * Pk * Zk.v;
        double tm = std::abs(term);
        acc += term;
        err += std::abs(binom * Pk) * Zk.err;
        mag += tm;
        if (k > 3 && tm < tol * 1e-4 && tm < lastmag) {
            err += 2.0 * tm; // geometric truncation
            break;
        }
        lastmag = tm;
        if (k == 96) err += 4.0 * tm;
    }
    return {acc, err + 8.0 * kEps * mag};
}

// corner sum over m, n > L by two-dimensional Euler-Maclaurin; every integral
// reduces to the G family.
ComplexValue corner_sum(Cplx s1, Cplx s2, Cplx s3, double L) {
    const Cplx total = s1 + s2 + s3;
    TailAccum out;

    auto Jint = [&](Cplx a, Cplx c) -> ComplexValue {
        // int_L^inf x^{-a} (x+L)^{-c} dx = L^{1-a-c} G(a+c-2, c)
        ComplexValue g = G_int(a + c - 2.0, c);
        Cplx scale = npow(L, a + c - 1.0);
        return {scale * g.v, std::abs(scale) * g.err};
    };

    // double integral
    {
        ComplexValue ga = G_int(s1 + s3 - 2.0, s3);
        ComplexValue gb = G_int(s2 + s3 - 2.0, s3);
        Cplx scale = npow(L, total - 2.0) / (total - 2.0);
        out.add({scale * (ga.v + gb.v), std::abs(scale) * (ga.err + gb.err)});
    }

    const Cplx Ls1 = npow(L, s1), Ls2 = npow(L, s2);
    const Cplx twoLs3 = npow(2.0 * L, s3);

    // boundary line integrals
    ComplexValue bx = Jint(s1, s3); // int f(x, L) dx / L^{-s2}
    ComplexValue by = Jint(s2, s3);
    out.add({-0.5 * (Ls2 * bx.v + Ls1 * by.v), 0.5 * (std::abs(Ls2) * bx.err + std::abs(Ls1) * by.err)});

    // corner value
    out.add({0.25 * Ls1 * Ls2 * twoLs3, 0.0});

    // integral of a (2j-1)-st derivative slice along the opposite variable:
    //   int dx of d_y^q f(x, L):  s_perp = s2 (powers of L), integral in s1
    auto D_int = [&](int q, Cplx s_perp, Cplx s_int, const Cplx& Lsp) -> ComplexValue {
        Cplx acc{0.0, 0.0};
        double err = 0.0;
        double sgn = (q % 2 == 0) ? 1.0 : -1.0;
        Cplx Li{1.0, 0.0}; // L^{-i}
        for (int i = 0; i <= q; ++i) {
            Cplx coef = binom_d(q, i) * rising(s_perp, i) * rising(s3, q - i);
            ComplexValue J = Jint(s_int, s3 + static_cast<double>(q - i));
            Cplx term = coef * Lsp * Li * J.v;
            acc += term;
            err += std::abs(coef * Lsp * Li) * J.err + kEps * std::abs(term);
            Li /= L;
        }
        return {sgn * acc, err};
    };

    // mixed corner derivative d_x^r d_y^q f(L, L)
    auto corner_deriv = [&](int r, int q) -> Cplx {
        Cplx acc{0.0, 0.0};
        double sgn = ((q + r) % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i <= q; ++i) {
            Cplx ci = binom_d(q, i) * rising(s2, i) * rising(s3, q - i);
            for (int t = 0; t <= r; ++t) {
                Cplx ct = binom_d(r, t) * rising(s3 + static_cast<double>(q - i), r - t) *
                          rising(s1, t);
                // L^{-s1-t} L^{-s2-i} (2L)^{-s3-q-r+i+t}
                Cplx pw = Ls1 * std::pow(L, -static_cast<double>(t)) * Ls2 *
                          std::pow(L, -static_cast<double>(i)) * twoLs3 *
                          std::pow(2.0 * L, -static_cast<double>(q + r - i - t));
                acc += ci * ct * pw;
            }
        }
        return sgn * acc;
    };

    const int J = 7;
    double cj[J + 2];
    for (int j = 1; j <= J + 1; ++j) cj[j] = bernoulli_d(static_cast<unsigned>(2 * j)) / fact_d(2 * j);

    Cplx deriv_part{0.0, 0.0};
    double deriv_err = 0.0;
    for (int j = 1; j <= J; ++j) {
        int q = 2 * j - 1;
        ComplexValue dy = D_int(q, s2, s1, Ls2); // int dx of d_y^q f(x,L)
        ComplexValue dx = D_int(q, s1, s2, Ls1); // int dy of d_x^q f(L,y)
        deriv_part += -cj[j] * (dy.v + dx.v);
        deriv_part += 0.5 * cj[j] * (corner_deriv(0, q) + corner_deriv(q, 0));
        deriv_err += std::fabs(cj[j]) * (dy.err + dx.err);
        for (int i = 1; i <= J; ++i)
            deriv_part += cj[j] * cj[i] * corner_deriv(2 * i - 1, q);
    }
    // remainder estimate: magnitude of the next order
    {
        int q = 2 * (J + 1) - 1;
        ComplexValue dy = D_int(q, s2, s1, Ls2);
        ComplexValue dx = D_int(q, s1, s2, Ls1);
        deriv_err += std::fabs(cj[J + 1]) * (std::abs(dy.v) + std::abs(dx.v) + dy.err + dx.err) * 2.0 +
                     std::fabs(cj[J + 1]) * std::abs(corner_deriv(0, q) + corner_deriv(q, 0));
    }
    out.add({deriv_part, deriv_err});
    return {out.v, out.err};
}

} // namespace

bool in_convergence_region(Cplx s1, Cplx s2, Cplx s3, double margin) {
    return (s1 + s3).real() >= 1.0 + margin && (s2 + s3).real() >= 1.0 + margin &&
           (s1 + s2 + s3).real() >= 2.0 + margin;
}

EvalResult zeta_mt_direct(Cplx s1, Cplx s2, Cplx s3, double tol) {
    if (!in_convergence_region(s1, s2, s3, 0.05))
        throw OutOfRegion("outside the convergence region of the defining double series");

    double maxmod = std::max({std::abs(s1), std::abs(s2), std::abs(s3)});
    const int L = std::min(512, std::max(64, static_cast<int>(8.0 * maxmod)));
    const double dL = static_cast<double>(L);

    std::vector<Cplx> A(2 * L + 1), B(2 * L + 1), C(4 * L + 1);
    for (int m = 1; m <= 2 * L; ++m) A[m] = npow(m, s1);
    for (int n = 1; n <= 2 * L; ++n) B[n] = npow(n, s2);
    for (int t = 2; t <= 4 * L; ++t) C[t] = npow(t, s3);

    Cplx block{0.0, 0.0};
    double blockmag = 0.0;
    for (int m = 1; m <= L; ++m) { // m <= L, n <= 2L
        Cplx inner = kernels::cdot(B.data() + 1, C.data() + m + 1, 2 * L);
        block += A[m] * inner;
        blockmag += std::abs(A[m] * inner);
    }
    for (int m = L + 1; m <= 2 * L; ++m) { // L < m <= 2L, n <= L
        Cplx inner = kernels::cdot(B.data() + 1, C.data() + m + 1, L);
        block += A[m] * inner;
        blockmag += std::abs(A[m] * inner);
    }

    ComplexValue strip_b = strip_sum(A, L, s2, s3, 2.0 * dL, tol); // m <= L, n > 2L
    ComplexValue strip_c = strip_sum(B, L, s1, s3, 2.0 * dL, tol); // n <= L, m > 2L
    ComplexValue corner = corner_sum(s1, s2, s3, dL);

    Cplx v = block + strip_b.v + strip_c.v + corner.v;
    double err = strip_b.err + strip_c.err + corner.err +
                 kEps * (blockmag * 8.0 + std::abs(v));
    return {{v, err}, EvalMethod::direct_sum};
}

// ---------------------------------------------------------------------------
// Mellin-Barnes contour integral
// ---------------------------------------------------------------------------

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
const std::vector<std::pair<double, double>>& gl_rule(int n) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<double, double>> rule(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre P_n(x) and derivative by recurrence
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule[static_cast<size_t>(i)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

void check_region_dm(Cplx s1, Cplx s2, Cplx s3, int M, double eta) {
    if (M < 1) throw Error("Mellin-Barnes shift M must be >= 1");
    if (!(eta > 0.0 && eta < 1.0)) throw Error("contour offset eta must lie in (0,1)");
    if (!(s3.real() > -M + eta) || !((s1 + s3).real() > 1.0 - M + eta) ||
        !(s2.real() < 1.0 + M - eta))
        throw OutsideHolomorphyRegion("point lies outside D_M for the chosen M");
}

// horizontal distance from the contour line Re z = c to the nearest pole of
// the integrand (all poles lie off the line on D_M)
double contour_pole_distance(Cplx s1, Cplx s2, Cplx s3, double c) {
    double d = std::fabs(c - std::round(c)); // Gamma(-z) poles at z = 0, 1, 2, ...
    if (std::round(c) < -0.5) d = std::fabs(c);
    d = std::min(d, c + s3.real());                    // Gamma(s3+z) pole j = 0
    d = std::min(d, c - 1.0 + (s1 + s3).real());       // zeta(s1+s3+z) pole
    d = std::min(d, c + 1.0 - s2.real());              // zeta(s2-z) pole
    return d;
}

struct PanelResult {
    Cplx v{0.0, 0.0};
    double err = 0.0;
    double maxmag = 0.0;
};

} // namespace

Cplx mb_integrand(Cplx s1, Cplx s2, Cplx s3, double c, double t) {
    Cplx z{c, t};
    return gamma_fn(s3 + z).v * gamma_fn(-z).v * riemann_zeta(s1 + s3 + z).v *
           riemann_zeta(s2 - z).v;
}

ComplexValue mb_integral(Cplx s1, Cplx s2, Cplx s3, const MtParams& params) {
    const int M = params.M;
    const double eta = params.eta;
    check_region_dm(s1, s2, s3, M, eta);
    const double c = M - eta;
    const double ztol = params.tol / 64.0;

    const double pole_dist = contour_pole_distance(s1, s2, s3, c);
    const double h = 1.0 / std::max(1, params.panels_per_unit);
    const int nodes = std::max(6, params.nodes);
    const auto& rule = gl_rule(nodes);
    // Bernstein-ellipse factor for the analyticity-based quadrature estimate
    const double u = 2.0 * pole_dist / h;
    const double rho = u + std::sqrt(u * u + 1.0);
    const double quad_factor = 4.0 * std::pow(rho, -2.0 * nodes);

    auto panel = [&](double a) -> PanelResult {
        PanelResult r;
        for (const auto& [x, w] : rule) {
            double t = a + 0.5 * h * (x + 1.0);
            Cplx z{c, t};
            ComplexValue g1 = gamma_fn(s3 + z);
            ComplexValue g2 = gamma_fn(-z);
            ComplexValue z1 = riemann_zeta(s1 + s3 + z, ztol);
            ComplexValue z2 = riemann_zeta(s2 - z, ztol);
            ComplexValue val = g1 * g2 * z1 * z2;
            r.v += 0.5 * h * w * val.v;
            r.err += 0.5 * h * w * val.err;
            r.maxmag = std::max(r.maxmag, std::abs(val.v));
        }
        r.err += quad_factor * r.maxmag * h;
        return r;
    };

    Cplx acc{0.0, 0.0};
    double err = 0.0;
    const double decay = std::exp(-M_PI * h); // per-panel modulus ratio from Gamma decay
    const double tail_factor = decay / (1.0 - decay);

    double Tmax = params.tail_T > 0.0 ? params.tail_T : 220.0;
    double Tmin = params.tail_T > 0.0 ? params.tail_T : 8.0 + std::fabs(s1.imag()) +
                                                            std::fabs(s2.imag()) + std::fabs(s3.imag());
    bool bounded = true;
    for (int side = 0; side < 2; ++side) {
        int quiet = 0;
        double t = 0.0;
        double lastmag = 0.0;
        while (true) {
            double a = (side == 0) ? t : -t - h;
            PanelResult r = panel(a);
            acc += r.v;
            err += r.err;
            lastmag = std::max(std::abs(r.v), r.maxmag * h * 1e-3);
            t += h;
            if (t + 1e-9 >= Tmax) {
                if (params.tail_T <= 0.0) bounded = false;
                break;
            }
            if (t >= Tmin) {
                quiet = (std::abs(r.v) < params.tol / 16.0) ? quiet + 1 : 0;
                if (quiet >= 3) break;
            }
        }
        err += lastmag * tail_factor; // geometric tail from e^{-pi|t|} decay
        if (params.tail_T > 0.0 && lastmag * tail_factor > params.tol)
            throw TailBoundExceeded("contour tail estimate exceeds tolerance at the configured height");
    }
    if (!bounded) throw TailBoundExceeded("contour did not decay below tolerance before the height cap");

    Cplx result = acc / (2.0 * M_PI);
    return {result, err / (2.0 * M_PI) + 4.0 * kEps * std::abs(result)};
}

// ---------------------------------------------------------------------------
// full continuation
// ---------------------------------------------------------------------------

namespace {

// distance from w to the set {1 - l : l in Z_{>=0}}; reports the nearest l.
double dist_to_pole_line(Cplx w, int* l_out = nullptr) {
    long l0 = std::lround(1.0 - w.real());
    double best = INFINITY;
    long bl = 0;
    for (long l = std::max<long>(0, l0 - 1); l <= std::max<long>(0, l0) + 1; ++l) {
        double d = std::abs(w - Cplx(1.0 - static_cast<double>(l), 0.0));
        if (d < best) {
            best = d;
            bl = l;
        }
    }
    if (l_out) *l_out = static_cast<int>(bl);
    return best;
}

double dist_to_positive_integers(Cplx w) {
    double r = std::round(w.real());
    if (r < 1.0) r = 1.0;
    return std::abs(w - Cplx(r, 0.0));
}

void check_mt_singular(Cplx s1, Cplx s2, Cplx s3, double threshold) {
    SingularityReport rep;
    int l = 0;
    double d13 = dist_to_pole_line(s1 + s3, &l);
    if (d13 < threshold) {
        rep.kind = SingularKind::pair_hyperplane;
        rep.distance = d13;
        rep.hits.push_back({false, 1, 3, l, d13});
        throw NearSingularSet(rep);
    }
    double d23 = dist_to_pole_line(s2 + s3, &l);
    if (d23 < threshold) {
        rep.kind = SingularKind::pair_hyperplane;
        rep.distance = d23;
        rep.hits.push_back({false, 2, 3, l, d23});
        throw NearSingularSet(rep);
    }
    double dt = std::abs(s1 + s2 + s3 - 2.0);
    if (dt < threshold) {
        rep.kind = SingularKind::total_plane;
        rep.distance = dt;
        rep.hits.push_back({true, 0, 0, 0, dt});
        throw NearSingularSet(rep);
    }
}

ComplexValue mb_assemble(Cplx s1, Cplx s2, Cplx s3, MtParams params) {
    if (params.M <= 0) {
        MtParams ap = mt_auto_params(s1, s2, s3, params.tol);
        params.M = ap.M;
    }
    check_region_dm(s1, s2, s3, params.M, params.eta);
    const double ztol = params.tol / (16.0 * (params.M + 2));

    ComplexValue rg3 = recip_gamma(s3);
    ComplexValue value{Cplx{0.0, 0.0}, 0.0};
    double mag = 0.0;

    // Gamma-prefactor term
    {
        ComplexValue t = gamma_fn(s2 + s3 - 1.0) * gamma_fn(1.0 - s2) * rg3 *
                         riemann_zeta(s1 + s2 + s3 - 1.0, ztol);
        value += t;
        mag += std::abs(t.v);
    }
    // finite zeta series
    for (int k = 0; k < params.M; ++k) {
        ComplexValue bin{binomial_cplx(-s3, static_cast<unsigned>(k)), 0.0};
        bin.err = 4.0 * kEps * std::abs(bin.v) * (k + 1.0);
        ComplexValue t = bin * riemann_zeta(s1 + s3 + static_cast<double>(k), ztol) *
                         riemann_zeta(s2 - static_cast<double>(k), ztol);
        value += t;
        mag += std::abs(t.v);
    }
    // contour integral (skipped when 1/Gamma(s3) vanishes exactly)
    if (rg3.v != Cplx(0.0, 0.0)) {
        ComplexValue t = rg3 * mb_integral(s1, s2, s3, params);
        value += t;
        mag += std::abs(t.v);
    }
    value.err += 8.0 * kEps * mag; // cancellation floor between assembled terms
    return value;
}

} // namespace

MtParams mt_auto_params(Cplx s1, Cplx s2, Cplx s3, double tol) {
    MtParams p;
    p.tol = tol;
    double cands[4] = {3.0, std::ceil(2.0 - (s1 + s3).real()), std::ceil(1.0 - s3.real()),
                       std::ceil(s2.real()) + 2.0};
    p.M = static_cast<int>(*std::max_element(cands, cands + 4));
    p.eta = 0.5;
    return p;
}

EvalResult zeta_mt_continued(Cplx s1, Cplx s2, Cplx s3, MtParams params) {
    const double threshold = std::sqrt(params.tol);
    check_mt_singular(s1, s2, s3, threshold);

    const double near_scale = 10.0 * threshold;
    bool near2 = dist_to_positive_integers(s2) < near_scale;
    bool near1 = dist_to_positive_integers(s1) < near_scale;

    if (near2 && !near1) {
        std::swap(s1, s2); // the double series is symmetric in s1, s2
        near2 = false;
    }

    ComplexValue value;
    if (!near2) {
        value = mb_assemble(s1, s2, s3, params);
    } else {
        // both s1 and s2 sit near positive integers: symmetric detour in s2
        // plus one Richardson step (even error expansion in theta)
        double theta = 0.06;
        ComplexValue A1, A2;
        for (int attempt = 0;; ++attempt) {
            try {
                MtParams q = params;
                auto avg = [&](double th) -> ComplexValue {
                    check_mt_singular(s1, s2 + Cplx(th, 0.0), s3, threshold);
                    check_mt_singular(s1, s2 - Cplx(th, 0.0), s3, threshold);
                    ComplexValue a = mb_assemble(s1, s2 + Cplx(th, 0.0), s3, q);
                    ComplexValue b = mb_assemble(s1, s2 - Cplx(th, 0.0), s3, q);
                    return {0.5 * (a.v + b.v), 0.5 * (a.err + b.err)};
                };
                A1 = avg(theta);
                A2 = avg(0.5 * theta);
                break;
            } catch (const NearSingularSet&) {
                theta *= 0.77;
                if (attempt >= 4) throw;
            }
        }
        Cplx extrap = (4.0 * A2.v - A1.v) / 3.0;
        double model_err = std::abs(A2.v - A1.v) / 3.0;
        value = {extrap, A1.err + A2.err + model_err};
    }

    if (value.err > std::max(params.tol, 1e3 * kEps * (1.0 + std::abs(value.v))))
        throw CancellationLoss("assembled error estimate exceeds the requested tolerance");
    return {value, EvalMethod::mellin_barnes};
}

EvalResult zeta_mt_eval(Cplx s1, Cplx s2, Cplx s3, MtParams params) {
    if (in_convergence_region(s1, s2, s3, 0.1)) return zeta_mt_direct(s1, s2, s3, params.tol);
    return zeta_mt_continued(s1, s2, s3, params);
}

} // namespace mtz
