#ifndef LGAPS_LFUNC_HPP
#define LGAPS_LFUNC_HPP

#include <optional>
#include <stdexcept>

#include "lgaps/characters.hpp"
#include "lgaps/cplx.hpp"

namespace lgaps {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Working precision plus Euler-Maclaurin knobs.  shift == 0 means auto:
// max(20, ceil(1.3*|Im s|)).
struct PrecisionConfig {
    mpfr_prec_t bits = 128;
    long shift = 0;
    int bernoulli_terms = 30;

    Real tolerance() const { return pow2(-static_cast<long>(bits) + 16); }
    long shift_for(const Real& im_s) const;
};

// Hurwitz zeta zeta(s, a) for 0 < a <= 1, s != 1, by Euler-Maclaurin with a
// rigorous remainder bound.  If err_bound is given, receives the bound.
Cplx hurwitz_zeta(const Cplx& s, const Real& a, const PrecisionConfig& cfg,
                  Real* err_bound = nullptr);

// zeta(s, a) - 1/(s-1): analytic through s = 1 (used to evaluate L(1, chi)
// for non-principal chi, where the poles cancel).
Cplx hurwitz_zeta_reg(const Cplx& s, const Real& a, const PrecisionConfig& cfg);

// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q)
Cplx dirichlet_l(const Cplx& s, const DirichletCharacter& chi, const PrecisionConfig& cfg);

// log Gamma(z) up to an integer multiple of 2*pi*i (Stirling with shift)
Cplx log_gamma(const Cplx& z, const PrecisionConfig& cfg);
// Gamma(s/2)
Cplx gamma_half(const Cplx& s, const PrecisionConfig& cfg);

// xi(s, chi) = (q/pi)^{s/2} Gamma(s/2) L(s, chi), chi primitive, q > 1
Cplx xi(const Cplx& s, const DirichletCharacter& chi, const PrecisionConfig& cfg);

struct RootNumber {
    Cplx k;       // K(chi) = sqrt(q)/G(1,chi), |K| = 1
    Cplx sqrt_k;  // principal branch; K = -1 resolved by the first non-real value of chi
    bool footnote_branch = false;
};

RootNumber root_number(const DirichletCharacter& chi, const PrecisionConfig& cfg);

// |xi(1-s, conj chi) - K(chi) xi(s, chi)|
Real fe_residual(const Cplx& s, const DirichletCharacter& chi, const PrecisionConfig& cfg);

// U(s, chi) = K^{1/2} xi(s, chi); real on the critical line
Cplx u_value(const Cplx& s, const DirichletCharacter& chi, const PrecisionConfig& cfg);

// Hardy's Z(t) for the Riemann zeta function (the q = 1 analogue of W)
Real hardy_z(const Real& t, const PrecisionConfig& cfg);

// Caches the root number and per-character constants so that repeated
// W-evaluations (zero scans) do not redo Gauss sums.
class WEvaluator {
public:
    WEvaluator(DirichletCharacter chi, PrecisionConfig cfg);

    // W(t, chi) = (q/pi)^{-1/4} U(1/2 + it, chi); asserts the imaginary
    // part is below 10x tolerance and returns the real part.
    // For q = 1 evaluates Hardy's Z(t) instead.
    Real operator()(const Real& t) const;

    // f(t, chi, kappa) = W(t - kappa/log Q) W(t) W(t + kappa/log Q)
    Real triple(const Real& t, const Real& kappa, const Real& big_q) const;

    const DirichletCharacter& character() const { return chi_; }
    const PrecisionConfig& config() const { return cfg_; }

private:
    DirichletCharacter chi_;
    DirichletCharacter chi_bar_;
    PrecisionConfig cfg_;
    Cplx sqrt_k_;
    Real quarter_pow_;  // (q/pi)^{-1/4}
    Real log_q_pi_;
};

Real w_value(const Real& t, const DirichletCharacter& chi, const PrecisionConfig& cfg);
Real f_value(const Real& t, const DirichletCharacter& chi, const Real& kappa,
             const Real& big_q, const PrecisionConfig& cfg);

}  // namespace lgaps

#endif
