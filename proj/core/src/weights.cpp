#include "lgaps/weights.hpp"

#include <stdexcept>

namespace lgaps {

Real g_weight(const Real& x, const Real& u) {
    if (!(x > Real(0L))) return Real(0L);
    return exp(-(u * u) / x);
}

Real psi1(const Real& t, const Real& u) {
    return g_weight(t - Real(1.25), u) * g_weight(Real(1.75) - t, u);
}

Real psi2(const Real& t, const Real& u) {
    return exp(Real(2L) * u) * g_weight(t - (Real(1.25) - u), u) *
           g_weight((Real(1.75) + u) - t, u);
}

namespace {

// (1/(sqrt(pi) u)) int_a^b exp(-(v-z)^2/u^2) dv = (erf((b-z)/u) - erf((a-z)/u))/2
Real gauss_window(const Real& z, const Real& a, const Real& b, const Real& u) {
    return Real(0.5) * (erf((b - z) / u) - erf((a - z) / u));
}

}  // namespace

Real phi1(const Real& z, const WeightParams& p) {
    if (!(p.u > Real(0L)) || !(p.eps > Real(0L)))
        throw std::invalid_argument("phi1: u and eps must be positive");
    Real su = sqrt(p.u);
    Real a = p.T + p.eps + su;
    Real b = Real(2L) * p.T - p.eps - su;
    // exp((3T)^2 - 1/u - z^2) overflows double headroom by design; keep the
    // whole expression in one exponential
    Real t3 = Real(3L) * p.T;
    Real penalty = exp(t3 * t3 - Real(1L) / p.u - z * z);
    return gauss_window(z, a, b, p.u) - penalty;
}

Real phi2(const Real& z, const WeightParams& p) {
    if (!(p.u > Real(0L))) throw std::invalid_argument("phi2: u must be positive");
    Real su = sqrt(p.u);
    Real a = p.T - su;
    Real b = Real(2L) * p.T + su;
    return gauss_window(z, a, b, p.u) / (Real(1L) - exp(Real(-1L) / p.u));
}

ErfcBoundCheck erfc_bound_check(const Real& x) {
    if (x < Real(0L)) throw std::invalid_argument("erfc_bound_check: need x >= 0");
    ErfcBoundCheck c;
    c.erfc_value = erfc(x);
    c.bound = exp(-(x * x));
    c.ok = c.erfc_value <= c.bound * Real(1L + 1e-12);
    return c;
}

ReasonablenessConstants reasonableness_constants(const WeightParams& p, int samples) {
    ReasonablenessConstants r{Real(0L), Real(0L), Real(0L)};
    Real h = Real(3L) / Real(static_cast<long>(samples));  // Psi grid on [0,3]
    Real dh(1e-5);
    for (int i = 0; i <= samples; ++i) {
        Real t = Real(static_cast<long>(i)) * h;
        for (Real v : {psi1(t, p.u), psi2(t, p.u)})
            if (v > r.n1) r.n1 = v;
        Real d1 = abs(psi1(t + dh, p.u) - psi1(t - dh, p.u)) / (Real(2L) * dh);
        Real d2 = abs(psi2(t + dh, p.u) - psi2(t - dh, p.u)) / (Real(2L) * dh);
        if (d1 > r.n2) r.n2 = d1;
        if (d2 > r.n2) r.n2 = d2;
    }
    Real lo = Real(-3L) * p.T, span = Real(9L) * p.T;
    for (int i = 0; i <= samples; ++i) {
        Real t = lo + span * Real(static_cast<long>(i)) / Real(static_cast<long>(samples));
        Real gauss = exp(-(t * t));
        // the defining bound is one-sided (Phi <= N3 exp(-t^2)), so the
        // huge negative excursions of Phi1 do not enter
        for (Real v : {phi1(t, p), phi2(t, p)}) {
            Real ratio = v / gauss;
            if (ratio > r.n3) r.n3 = ratio;
        }
    }
    return r;
}

}  // namespace lgaps
