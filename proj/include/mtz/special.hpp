#ifndef MTZ_SPECIAL_HPP
#define MTZ_SPECIAL_HPP

#include "mtz/complexval.hpp"
#include "mtz/rational.hpp"

namespace mtz {

// Expansion data of Gamma at a non-positive integer n:
//   Gamma(s) = residue/(s - n) + constant + O(s - n).
struct GammaPoleData {
    int n = 0;
    Rational residue;       // (-1)^{|n|} / |n|!
    ComplexValue constant;  // (-1)^{|n|} psi(|n|+1) / |n|!
};

// Complex Gamma via the Lanczos approximation (reflection for Re s < 1/2).
ComplexValue gamma_fn(Cplx s);

// Entire reciprocal 1/Gamma; exactly zero at non-positive integers.
ComplexValue recip_gamma(Cplx s);

// Riemann zeta by adaptive Euler-Maclaurin summation; functional equation in
// the left half-plane. Throws PoleAtOne iff s == 1 exactly.
ComplexValue riemann_zeta(Cplx s, double tol = 1e-12);

// Stieltjes constant gamma_j of the Laurent expansion of zeta about s = 1:
//   zeta(s) = 1/(s-1) + sum_j (-1)^j gamma_j (s-1)^j / j!.
// j = 0 gives the Euler-Mascheroni constant.
ComplexValue zeta_laurent_at_one(unsigned j);

// (-1)^s in the convention e^{i pi s}; exact +-1 at real integers.
inline ComplexValue unit_power(Cplx s) {
    Cplx w = exp_i_pi(s);
    return {w, 4.0 * kEps * std::abs(w) * (1.0 + std::abs(s))};
}

GammaPoleData gamma_pole_data(int n);

// Rising factorial s(s+1)...(s+n-1).
inline Cplx rising(Cplx s, int n) {
    Cplx p{1.0, 0.0};
    for (int i = 0; i < n; ++i) p *= s + static_cast<double>(i);
    return p;
}

} // namespace mtz

#endif
