#ifndef MTZ_MT_HPP
#define MTZ_MT_HPP

#include "mtz/complexval.hpp"

namespace mtz {

// Numerical-evaluation policy for the continuation.
struct MtParams {
    int M = 0;               // series/contour split point; 0 = automatic
    double eta = 0.5;        // contour offset in (0,1)
    double tail_T = 0.0;     // contour truncation height; 0 = adaptive
    int panels_per_unit = 1; // quadrature panels per unit height
    int nodes = 24;          // Gauss-Legendre nodes per panel
    double tol = 1e-10;
};

enum class EvalMethod { direct_sum, mellin_barnes };

struct EvalResult {
    ComplexValue value;
    EvalMethod method = EvalMethod::mellin_barnes;
    double err() const { return value.err; }
};

inline const char* method_name(EvalMethod m) {
    return m == EvalMethod::direct_sum ? "direct-sum" : "mellin-barnes";
}

// Convergence test for the defining double series, with margin:
//   Re(s1+s3) > 1, Re(s2+s3) > 1, Re(s1+s2+s3) > 2.
bool in_convergence_region(Cplx s1, Cplx s2, Cplx s3, double margin);

// Direct double summation sum_{m,n>=1} m^{-s1} n^{-s2} (m+n)^{-s3} with
// Euler-Maclaurin tail corrections; requires the convergence inequalities
// with margin >= 0.05 (throws OutOfRegion otherwise).
EvalResult zeta_mt_direct(Cplx s1, Cplx s2, Cplx s3, double tol = 1e-10);

// Contour integral (1/2 pi i) int_(M-eta) Gamma(s3+z) Gamma(-z)
// zeta(s1+s3+z) zeta(s2-z) dz on the region D_M.
ComplexValue mb_integral(Cplx s1, Cplx s2, Cplx s3, const MtParams& params);

// Integrand on the vertical line z = c + i t (exposed for decay checks).
Cplx mb_integrand(Cplx s1, Cplx s2, Cplx s3, double c, double t);

// Full continuation off the singular set
//   {s1+s3 in 1-Z_{>=0}} u {s2+s3 in 1-Z_{>=0}} u {s1+s2+s3 = 2}.
EvalResult zeta_mt_continued(Cplx s1, Cplx s2, Cplx s3, MtParams params = {});

MtParams mt_auto_params(Cplx s1, Cplx s2, Cplx s3, double tol = 1e-10);

// Routes to the direct sum deep inside the convergence region, otherwise to
// the continuation.
EvalResult zeta_mt_eval(Cplx s1, Cplx s2, Cplx s3, MtParams params = {});

} // namespace mtz

#endif
