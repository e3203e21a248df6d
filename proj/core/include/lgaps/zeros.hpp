#ifndef LGAPS_ZEROS_HPP
#define LGAPS_ZEROS_HPP

#include <optional>
#include <vector>

#include "lgaps/lfunc.hpp"

namespace lgaps {

struct ZeroList {
    std::int64_t q = 0;
    std::int64_t chi_index = 0;
    Real t_lo;
    Real t_hi;
    std::vector<Real> ordinates;  // strictly increasing after dedup
    Real refine_tol;
};

// Sign-change scan with bisection refinement.  step <= 0 picks the default
// 2*pi / (8 * log(q(|t|+3))), an 8x oversampling of the mean zero spacing.
ZeroList scan_zeros(const WEvaluator& w, const Real& t_lo, const Real& t_hi,
                    const Real& step = Real(0L), const Real& refine_tol = Real(1e-10));

struct CountCheck {
    long empirical = 0;    // zeros of W with |t| < T
    double predicted = 0;  // 2 [ (T/2pi) log(Tq/2pi) - T/2pi ]
    double residual = 0;
    double envelope = 0;   // 8 log(qT)
    bool ok = false;
};

CountCheck count_vs_formula(const DirichletCharacter& chi, double T, const PrecisionConfig& cfg);

struct GapReport {
    std::vector<double> gaps;
    std::vector<double> normalized;  // gap * log(q) / 2pi
    double max_normalized = 0;
    double min_normalized = 0;
    long count = 0;
};

std::optional<GapReport> gap_report(const ZeroList& z);

struct ChainWitness {
    double left = 0;
    double right = 0;
};

struct ChainCheck {
    bool ok = false;
    bool vacuous = false;
    bool gaps_ok = false;
    bool endpoints_ok = false;
    long f_zero_count = 0;
    std::optional<ChainWitness> witness;  // first violating consecutive pair
};

// Zero-chain property for f(t) = W(t-h) W(t) W(t+h), h = kappa/log Q:
// the zero multiset of f is the union of wzeros shifted by 0, +-h, clipped
// to [T+h, 2T-h].  Checks consecutive gaps <= h + tol and the endpoint
// conditions first wzero <= T + 2h, last wzero >= 2T - 2h.
ChainCheck gap_chain_check(const std::vector<Real>& wzeros, const Real& kappa,
                           const Real& big_q, const Real& T,
                           const Real& tol = Real(1e-9));

struct WirtingerResult {
    Real lhs;  // integral of y^2
    Real rhs;  // ((b-a)/pi)^2 * integral of y'^2
    bool ok = false;
};

// y sampled uniformly on [a,b] with y front/back ~ 0; composite Simpson
// (sample count must be odd, >= 65) with 4th-order finite differences for y'.
WirtingerResult wirtinger_check(const std::vector<Real>& y, const Real& a, const Real& b);

}  // namespace lgaps

#endif
