#ifndef LGAPS_SHIFTFRAME_HPP
#define LGAPS_SHIFTFRAME_HPP

#include <array>
#include <vector>

#include "lgaps/cplx.hpp"

namespace lgaps {

// Nilpotent pair a + b*u + c*v + d*uv with u^2 = v^2 = 0: carries a value
// and its mixed first/second derivatives along two independent directions.
struct Dual2 {
    Cplx a, du, dv, duv;

    Dual2() : a(Real(0L)), du(Real(0L)), dv(Real(0L)), duv(Real(0L)) {}
    explicit Dual2(Cplx v) : a(std::move(v)), du(Real(0L)), dv(Real(0L)), duv(Real(0L)) {}
    Dual2(Cplx a_, Cplx du_, Cplx dv_, Cplx duv_)
        : a(std::move(a_)), du(std::move(du_)), dv(std::move(dv_)), duv(std::move(duv_)) {}

    friend Dual2 operator+(const Dual2& x, const Dual2& y) {
        return {x.a + y.a, x.du + y.du, x.dv + y.dv, x.duv + y.duv};
    }
    friend Dual2 operator-(const Dual2& x, const Dual2& y) {
        return {x.a - y.a, x.du - y.du, x.dv - y.dv, x.duv - y.duv};
    }
    friend Dual2 operator-(const Dual2& x) { return {-x.a, -x.du, -x.dv, -x.duv}; }
    friend Dual2 operator*(const Dual2& x, const Dual2& y) {
        return {x.a * y.a,
                x.a * y.du + x.du * y.a,
                x.a * y.dv + x.dv * y.a,
                x.a * y.duv + x.duv * y.a + x.du * y.dv + x.dv * y.du};
    }
    Dual2& operator+=(const Dual2& y) { *this = *this + y; return *this; }
    Dual2& operator*=(const Dual2& y) { *this = *this * y; return *this; }

    bool std_invertible() const { return !a.is_zero(); }
    Dual2 inverse() const;   // requires std_invertible()
    Dual2 exponential() const;
    // square of the nilpotent part (b u + c v + d uv)^2 = 2 b c uv
    Dual2 nil_sq() const {
        return {Cplx(Real(0L)), Cplx(Real(0L)), Cplx(Real(0L)), Real(2L) * (du * dv)};
    }
    bool nil_zero() const { return du.is_zero() && dv.is_zero() && duv.is_zero(); }
};

// Truncated Laurent series in eps with Dual2 coefficients, exponents
// k_min..k_max inclusive.
class EpsSeries {
public:
    EpsSeries(int k_min, int k_max)
        : k_min_(k_min), k_max_(k_max),
          c_(static_cast<size_t>(k_max - k_min + 1)) {}

    int k_min() const { return k_min_; }
    int k_max() const { return k_max_; }
    Dual2& at(int k) { return c_[static_cast<size_t>(k - k_min_)]; }
    const Dual2& at(int k) const { return c_[static_cast<size_t>(k - k_min_)]; }

    EpsSeries& operator+=(const EpsSeries& o);
    // product truncated to the common window
    friend EpsSeries operator*(const EpsSeries& x, const EpsSeries& y);
    void scale(const Dual2& s);

private:
    int k_min_, k_max_;
    std::vector<Dual2> c_;
};

// One of the six shift coordinates: i*m*kappa + mult*eps (+ optional
// nilpotent perturbation), in units where eps = delta * log Q.
struct Shift {
    int kappa_mult;  // coefficient of i*kappa: +1, 0, -1
    int eps_mult;    // 1, 2 or 4
    Dual2 nil;       // u- or v-perturbation for derivative extraction
};

struct ShiftSet {
    std::array<Shift, 3> s;
};

// Base configuration: A = {i kappa + eps, 2 eps, -i kappa + 4 eps} and the
// same pattern for B.  deriv_a / deriv_b in 1..6 attach the u (resp. v)
// perturbation to that coordinate (1..3 = A side, 4..6 = B side); 0 = none.
void base_shift_sets(ShiftSet& a, ShiftSet& b, int deriv_a = 0, int deriv_b = 0);

struct SubsetPair {
    unsigned s_mask;  // subset of A, bits 0..2
    unsigned t_mask;  // subset of B, bits 0..2
};

// All (S,T) with |S| = |T|; 20 pairs, ordered by |S| then by masks.
std::vector<SubsetPair> subset_pairs();

// delta_{X,Y} = (sum X + sum Y)/2 for explicit complex shift triples
Cplx delta_xy(const std::array<Cplx, 3>& x, const std::array<Cplx, 3>& y);

struct EngineConfig {
    int order = 12;            // highest retained eps power
    int low_order = -16;       // lowest tracked eps power
    mpfr_prec_t bits = 256;
};

// Laurent series in eps of exp(delta_{X,Y}) * prod 1/(x+y) for the subset
// pair, with X = (A \ S) u (-T), Y = (B \ T) u (-S).
EpsSeries r_term_series(const SubsetPair& pair, const ShiftSet& a, const ShiftSet& b,
                        const Real& kappa, const EngineConfig& cfg);

struct EpsSumResult {
    Real value;              // eps^0 coefficient (real part)
    Real max_negative;       // largest |coefficient| among eps^k, k < 0
    Real imag_part;          // |Im| of the eps^0 coefficient
};

// Sum of the 20 term series; asserts the negative powers cancel and the
// eps^0 coefficient is real.  Throws PrecisionError-style runtime errors
// when cancellation fails.
EpsSumResult r_sum_eps0(const Real& kappa, const EngineConfig& cfg = {});

// Mixed second derivative d^2/d alpha_i d alpha_j of the sum (one index per
// side), eps^0 coefficient.
EpsSumResult r_sum_deriv_eps0(const Real& kappa, int dir_i, int dir_j,
                              const EngineConfig& cfg = {});

// P(X,Y;Q)/R(X,Y;Q) for explicit numeric shifts: consistency probe of the
// zeta-pole approximation 1/(x+y) against zeta(1+x+y).
Cplx p_vs_r_ratio(const std::array<Cplx, 3>& x, const std::array<Cplx, 3>& y,
                  const Real& big_q, mpfr_prec_t bits = 128);

}  // namespace lgaps

#endif
