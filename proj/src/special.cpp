#include "mtz/special.hpp"

#include "mtz/bernoulli.hpp"
#include "mtz/errors.hpp"

#include <array>
#include <vector>

namespace mtz {

namespace {

// Lanczos rational approximation tuned for double precision (g chosen so the
// 13-term sum reaches ~1 ulp relative accuracy on the right half-plane).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kLanczosNum = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443603510852711448385570,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};

constexpr std::array<double, 13> kLanczosDen = {
    0.0, 39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0,
    13339535.0, 2637558.0, 357423.0, 32670.0, 1925.0, 66.0, 1.0,
};

Cplx lanczos_sum(Cplx z) {
    Cplx num{0.0, 0.0}, den{0.0, 0.0};
    for (int i = 12; i >= 0; --i) {
        num = num * z + kLanczosNum[static_cast<size_t>(i)];
        den = den * z + kLanczosDen[static_cast<size_t>(i)];
    }
    return num / den;
}

// Gamma on Re z >= 1/2 only.
Cplx gamma_right(Cplx z) {
    Cplx zgh = z + (kLanczosG - 0.5);
    return lanczos_sum(z) * std::pow(zgh, z - 0.5) * std::exp(-zgh);
}

constexpr double kGammaRelErr = 8.0 * kEps;

} // namespace

ComplexValue gamma_fn(Cplx s) {
    if (s.real() >= 0.5) {
        Cplx g = gamma_right(s);
        return {g, kGammaRelErr * std::abs(g)};
    }
    // Reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s)).
    Cplx sp = sinpi(s);
    Cplx g = M_PI / (sp * gamma_right(1.0 - s));
    double mag = std::abs(g);
    if (sp == Cplx(0.0, 0.0)) return {Cplx(INFINITY, 0.0), INFINITY};
    return {g, 4.0 * kGammaRelErr * mag};
}

ComplexValue recip_gamma(Cplx s) {
    if (s.real() >= 0.5) {
        Cplx g = gamma_right(s);
        Cplx r = 1.0 / g;
        return {r, kGammaRelErr * std::abs(r)};
    }
    // 1/Gamma(s) = sin(pi s) Gamma(1 - s) / pi, entire; sinpi makes the
    // zeros at non-positive integers exact.
    Cplx r = sinpi(s) * gamma_right(1.0 - s) / M_PI;
    return {r, 4.0 * kGammaRelErr * std::abs(r)};
}

namespace {

double fact_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Remainder bound after K correction terms at shift N (Edwards):
//   |R_K| <= |B_{2K+2}/(2K+2)! (s)_{2K+1}| N^{-sigma-2K-1} |s+2K+1|/(sigma+2K+1)
double em_zeta_bound(Cplx s, int N, int K) {
    const double sigma = s.real();
    if (sigma + 2 * K + 1 <= 1.0) return INFINITY;
    double rmag = 1.0;
    for (int i = 0; i < 2 * K + 1; ++i) rmag *= std::hypot(sigma + i, s.imag());
    return std::fabs(bernoulli_d(static_cast<unsigned>(2 * K + 2))) / fact_d(2 * K + 2) * rmag *
           std::pow(static_cast<double>(N), -sigma - 2 * K - 1) *
           std::hypot(sigma + 2 * K + 1, s.imag()) / (sigma + 2 * K + 1);
}

// Euler-Maclaurin on Re s >= 0.5:
//   zeta(s) = sum_{n<N} n^-s + N^-s/2 + N^{1-s}/(s-1)
//           + sum_{k=1..K} B_2k/(2k)! (s)_{2k-1} N^{1-s-2k} + R_K.
ComplexValue zeta_em_right(Cplx s, double tol) {
    static const int kNs[] = {24, 32, 48, 64, 96, 128, 192, 256, 384, 512};

    int bestN = 512, bestK = 20;
    double bestBound = INFINITY;
    for (int N : kNs) {
        if (N < 8 + std::fabs(s.imag()) / 4.0) continue;
        double lastBound = INFINITY;
        for (int K = 2; K <= 22; ++K) {
            double bound = em_zeta_bound(s, N, K);
            if (bound < bestBound) {
                bestBound = bound;
                bestN = N;
                bestK = K;
            }
            if (bound <= tol * 0.25) break;
            if (bound > lastBound) break; // asymptotic series turned around
            lastBound = bound;
        }
        if (bestBound <= tol * 0.25) break;
    }

    const int N = bestN, K = bestK;
    const double dN = static_cast<double>(N);
    Cplx sum{0.0, 0.0};
    double mag = 0.0;
    for (int n = 1; n < N; ++n) {
        Cplx t = std::exp(-s * std::log(static_cast<double>(n)));
        sum += t;
        mag += std::abs(t);
    }
    Cplx Nms = std::exp(-s * std::log(dN));
    sum += 0.5 * Nms;
    Cplx pole = Nms * dN / (s - 1.0);
    sum += pole;
    mag += std::abs(Nms) + std::abs(pole);

    Cplx rise = s;          // (s)_{2k-1}
    Cplx Npw = Nms / dN;    // N^{1-s-2k}
    for (int k = 1; k <= K; ++k) {
        if (k > 1) {
            rise *= (s + static_cast<double>(2 * k - 3)) * (s + static_cast<double>(2 * k - 2));
            Npw /= dN * dN;
        }
        Cplx term = bernoulli_d(static_cast<unsigned>(2 * k)) / fact_d(2 * k) * rise * Npw;
        sum += term;
        mag += std::abs(term);
    }
    return {sum, bestBound + mag * kEps * 4.0};
}

} // namespace

ComplexValue riemann_zeta(Cplx s, double tol) {
    if (s == Cplx(1.0, 0.0)) throw PoleAtOne{};
    // Euler-Maclaurin remains valid slightly left of the critical strip; using
    // it down to Re s = -1/4 keeps the reflection factor zeta(1-s) away from
    // its pole.
    if (s.real() >= -0.25) return zeta_em_right(s, tol);
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    ComplexValue z1 = zeta_em_right(1.0 - s, tol);
    ComplexValue g = gamma_fn(1.0 - s);
    Cplx pref = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(M_PI));
    ComplexValue sp{sinpi(s * 0.5), 0.0};
    sp.err = 2.0 * kEps * std::abs(sp.v);
    ComplexValue p{pref, 4.0 * kEps * std::abs(pref)};
    return p * sp * g * z1;
}

namespace {

// Stieltjes constants by tail-corrected Euler-Maclaurin applied to
// f(x) = (log x)^j / x, whose derivatives are P_m(log x)/x^{m+1} with
// P_0 = u^j and P_{m+1} = P_m' - (m+1) P_m.
double stieltjes_impl(unsigned j, double* err_out) {
    const int N = 64;
    const double lnN = std::log(static_cast<double>(N));

    double sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        double ln = std::log(static_cast<double>(n));
        sum += std::pow(ln, static_cast<double>(j)) / n;
    }
    sum -= std::pow(lnN, static_cast<double>(j + 1)) / (j + 1);
    sum -= 0.5 * std::pow(lnN, static_cast<double>(j)) / N;

    std::vector<double> P(j + 1, 0.0);
    P[j] = 1.0; // u^j
    auto derive = [&](int m) {
        // P -> P' - (m+1) P
        std::vector<double> Q(P.size(), 0.0);
        for (size_t i = 0; i + 1 < P.size(); ++i) Q[i] = (static_cast<double>(i) + 1.0) * P[i + 1];
        for (size_t i = 0; i < P.size(); ++i) Q[i] -= (m + 1.0) * P[i];
        P = Q;
    };
    auto eval_P = [&](double u) {
        double v = 0.0;
        for (size_t i = P.size(); i-- > 0;) v = v * u + P[i];
        return v;
    };

    double lastTerm = INFINITY;
    double err = INFINITY;
    int m = 0;
    double Npow = static_cast<double>(N); // N^{m+1}
    for (int k = 1; k <= 16; ++k) {
        while (m < 2 * k - 1) {
            derive(m);
            ++m;
            Npow *= N;
        }
        double fac = 1.0;
        for (int i = 1; i <= 2 * k; ++i) fac *= i;
        double term = bernoulli_d(static_cast<unsigned>(2 * k)) / fac * eval_P(lnN) / Npow;
        if (std::fabs(term) > lastTerm) { // asymptotic divergence point
            err = 2.0 * lastTerm;
            break;
        }
        sum -= term;
        lastTerm = std::fabs(term);
        err = 2.0 * lastTerm;
        if (lastTerm < 1e-18) break;
    }
    if (err_out) *err_out = err + 64.0 * kEps;
    return sum;
}

} // namespace

ComplexValue zeta_laurent_at_one(unsigned j) {
    double err = 0.0;
    double v = stieltjes_impl(j, &err);
    return {Cplx(v, 0.0), err};
}

GammaPoleData gamma_pole_data(int n) {
    if (n > 0) throw Error("gamma_pole_data: argument must be a non-positive integer");
    unsigned a = static_cast<unsigned>(-n);
    GammaPoleData d;
    d.n = n;
    Rational r = rat(factorial(a), Int(1));
    d.residue = (a % 2 == 0 ? rat(1) : rat(-1)) / r;
    // psi(a+1) = -gamma + H_a
    ComplexValue gamma0 = zeta_laurent_at_one(0);
    Rational H = rat(0);
    for (unsigned i = 1; i <= a; ++i) H += rat(1, static_cast<long>(i));
    double psi = -gamma0.re() + to_double(H);
    double c = (a % 2 == 0 ? 1.0 : -1.0) * psi / to_double(Rational(r));
    d.constant = {Cplx(c, 0.0), gamma0.err / to_double(Rational(r)) + 8.0 * kEps * std::fabs(c)};
    return d;
}

} // namespace mtz
