#ifndef LGAPS_WEIGHTS_HPP
#define LGAPS_WEIGHTS_HPP

#include "lgaps/real.hpp"

namespace lgaps {

struct WeightParams {
    Real u = Real(0.01);
    Real eps = Real(0.5);  // default 0.05 * T
    Real T = Real(10L);
};

// g(x) = exp(-u^2/x) for x > 0, else 0; smooth at 0
Real g_weight(const Real& x, const Real& u);

// Psi1(t) = g(t - 5/4) g(7/4 - t): supported in (5/4, 7/4), below the
// indicator of (5/4, 7/4]
Real psi1(const Real& t, const Real& u);

// Psi2(t) = exp(2u) g(t - (5/4 - u)) g((7/4 + u) - t): above that indicator
Real psi2(const Real& t, const Real& u);

// Phi1(z) = (1/(sqrt(pi) u)) int_{T+eps+sqrt(u)}^{2T-eps-sqrt(u)}
//             exp(-(v-z)^2/u^2) dv  -  exp((3T)^2 - 1/u) exp(-z^2);
// the Gaussian integral evaluated in closed form via erf.  Values can be
// astronomically scaled, hence high-precision arithmetic throughout.
Real phi1(const Real& z, const WeightParams& p);

// Phi2(z) = (1/u) / (sqrt(pi) (1 - exp(-1/u))) int_{T-sqrt(u)}^{2T+sqrt(u)}
//             exp(-(v-z)^2/u^2) dv
Real phi2(const Real& z, const WeightParams& p);

struct ErfcBoundCheck {
    Real erfc_value;
    Real bound;  // exp(-x^2)
    bool ok = false;
};

// erfc(x) <= exp(-x^2) for x >= 0
ErfcBoundCheck erfc_bound_check(const Real& x);

struct ReasonablenessConstants {
    Real n1;  // sup of Psi1, Psi2 over a sample grid
    Real n2;  // sup of their numeric derivatives
    Real n3;  // sup of Phi / exp(-t^2) over a sample grid
};

ReasonablenessConstants reasonableness_constants(const WeightParams& p, int samples = 2000);

}  // namespace lgaps

#endif
