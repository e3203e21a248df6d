#ifndef LGAPS_LOCALCONST_HPP
#define LGAPS_LOCALCONST_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lgaps/cplx.hpp"

namespace lgaps {

std::vector<std::int64_t> primes_up_to(std::int64_t limit);

struct EulerProductEstimate {
    Real value;
    std::int64_t prime_cutoff = 0;
    Real tail_bound;  // |true - value| <= tail_bound
    std::string model;
};

// prod_p (1-1/p)^4 (1+4/p+1/p^2)
EulerProductEstimate a3(std::int64_t P, mpfr_prec_t bits = 128);
// prod_p (1-1/p)^5 (1+5/p-5/p^2+14/p^3-15/p^4+5/p^5+4/p^6-4/p^7+1/p^8)
EulerProductEstimate a3_L(std::int64_t P, mpfr_prec_t bits = 128);

using ShiftTriple = std::array<Cplx, 3>;

// e(0*theta)-coefficient of the six geometric series
//   prod_i 1/(1 - e(theta) p^{-1/2-alpha_i}) * prod_j 1/(1 - e(-theta) p^{-1/2-beta_j}),
// by convolution up to total degree `cutoff` in p^{-1/2}.
Cplx b_p(const ShiftTriple& alpha, const ShiftTriple& beta, std::int64_t p, int cutoff = 60);

// the same coefficient by trapezoid quadrature in theta (2^10 nodes)
Cplx b_p_quadrature(const ShiftTriple& alpha, const ShiftTriple& beta, std::int64_t p,
                    int nodes = 1024);

// zero-shift value as an exact rational: sum_g binom(g+2,2)^2 p^{-g}, summed
// in closed form through the binomial basis
mpq_class b_p_exact_zero_shift(std::int64_t p);

// prod over the 9 pairs of (1 - p^{-1-alpha-beta})
Cplx z_p_inv(const ShiftTriple& alpha, const ShiftTriple& beta, std::int64_t p);

// prod_{p<=P} b_p * z_p_inv with a tail bound from the 1 + O(p^-2) envelope
EulerProductEstimate a_partial(const ShiftTriple& alpha, const ShiftTriple& beta,
                               std::int64_t P, mpfr_prec_t bits = 128);

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    std::vector<double> xs;         // checkpoints
    std::vector<double> values;     // S(x) at checkpoints
    std::vector<double> residuals;  // S(x) - (slope log x + intercept)
    double h2_over_t = 0;           // H2(t)/t at t = x_max
};

// S(x) = sum_{q<=x} (phi*(q)/q^2) prod_{p|q} (1-1/p)^5/(1+4/p+1/p^2),
// least-squares against log x over log-spaced checkpoints; also
// H2(t) = sum_{q<=t} (phi_flat(q)/q) prod_{p|q} ... at t = x_max.
SlopeFit slope_fit(std::int64_t x_max);

// phi*(q) and phi_flat(q) for all q <= limit via sieves (phi_flat through
// phi_flat(q) = sum_{d|q} mu(q/d) E(d), E(d) = phi(d)/2 for d > 2, else 1)
std::vector<std::int64_t> phi_star_sieve(std::int64_t limit);
std::vector<std::int64_t> phi_flat_sieve(std::int64_t limit);

}  // namespace lgaps

#endif
