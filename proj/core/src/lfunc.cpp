#include "lgaps/lfunc.hpp"

#include <cmath>

#include "lgaps/bernoulli.hpp"

namespace lgaps {

long PrecisionConfig::shift_for(const Real& im_s) const {
    if (shift > 0) return shift;
    long m = static_cast<long>(std::ceil(1.3 * std::abs(im_s.to_double())));
    return m < 20 ? 20 : m;
}

namespace {

// ensure temporaries created inside the library honor cfg.bits even when the
// caller's process-wide default is lower
struct WorkingPrec {
    mpfr_prec_t saved;
    explicit WorkingPrec(mpfr_prec_t bits) : saved(Real::working_bits()) {
        if (bits > saved) Real::set_working_bits(bits);
    }
    ~WorkingPrec() { Real::set_working_bits(saved); }
    WorkingPrec(const WorkingPrec&) = delete;
    WorkingPrec& operator=(const WorkingPrec&) = delete;
};

// exp(w * lx) for real lx (i.e. x^w with x = e^lx > 0)
Cplx cpow_ln(const Cplx& w, const Real& lx) {
    return exp(Cplx(w.re * lx, w.im * lx));
}

struct EmResult {
    Cplx value;
    Real bound;
};

// Euler-Maclaurin for zeta(s, a) with shift M and B tail terms.  When
// sub_pole is set the pole piece x^{1-s}/(s-1) is replaced by
// (x^{1-s} - 1)/(s-1), i.e. the result is zeta(s,a) - 1/(s-1); at s = 1
// that piece is evaluated as its limit -log x.
EmResult em_hurwitz(const Cplx& s, const Real& a, long M, int B, bool sub_pole) {
    Cplx sum(Real(0L));
    for (long n = 0; n < M; ++n) {
        Real x = Real(n) + a;
        sum += cpow_ln(-s, log(x));
    }
    Real x = Real(M) + a;
    Real lx = log(x);

    Cplx s1 = s - Cplx(Real(1L));
    if (sub_pole) {
        if (s1.is_zero()) {
            sum -= Cplx(lx);
        } else {
            sum += (cpow_ln(-s1, lx) - Cplx(Real(1L))) / s1;
        }
    } else {
        if (s1.is_zero()) throw PoleError("hurwitz_zeta: pole at s = 1");
        sum += cpow_ln(-s1, lx) / s1;
    }

    Cplx xms = cpow_ln(-s, lx);
    sum += Real(0.5) * xms;

    // tail: sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * x^{-s-2k+1}
    Cplx rising = s;              // prod_{j=0}^{2k-2} (s+j), starts at k = 1
    mpz_class fact = 2;           // (2k)!
    Cplx xpow = xms * Cplx(Real(1L) / x);  // x^{-s-2k+1} at k = 1
    Real inv_x2 = Real(1L) / (x * x);
    for (int k = 1; k <= B; ++k) {
        mpq_class c = bernoulli(2 * static_cast<unsigned>(k)) / mpq_class(fact);
        sum += to_real(c, s.re.precision()) * (rising * xpow);
        if (k < B) {
            rising *= (s + Cplx(Real(2L * k - 1))) * (s + Cplx(Real(2L * k)));
            fact *= (2 * k + 1) * (2 * k + 2);
            xpow = xpow * Cplx(inv_x2);
        }
    }

    // remainder bound: |B_{2B+2}/(2B+2)!| |s...(s+2B)| x^{-sigma-2B-1}
    //                  * |s+2B+1| / (sigma+2B+1)
    rising *= (s + Cplx(Real(2L * B - 1))) * (s + Cplx(Real(2L * B)));
    fact *= (2 * B + 1) * (2 * B + 2);
    mpq_class cb = bernoulli(2 * static_cast<unsigned>(B) + 2) / mpq_class(fact);
    Real sigma = s.re;
    Real denom = sigma + Real(2L * B + 1);
    if (!(denom > Real(0L))) throw PrecisionError("hurwitz_zeta: Re s too negative");
    Real bound = ::lgaps::abs(to_real(cb, sigma.precision())) * abs(rising) *
                 exp(-(sigma + Real(2L * B + 1)) * lx) *
                 abs(s + Cplx(Real(2L * B + 1))) / denom;
    return {sum, bound};
}

Cplx hurwitz_impl(const Cplx& s, const Real& a, const PrecisionConfig& cfg, bool sub_pole,
                  Real* err_bound) {
    if (!(a > Real(0L)) || a > Real(1L))
        throw std::invalid_argument("hurwitz_zeta: need 0 < a <= 1");
    long M = cfg.shift_for(s.im);
    Real tol = cfg.tolerance();
    for (int attempt = 0; attempt < 3; ++attempt) {
        EmResult r = em_hurwitz(s, a, M, cfg.bernoulli_terms, sub_pole);
        if (r.bound < tol) {
            if (err_bound) *err_bound = r.bound;
            return r.value;
        }
        M *= 2;
    }
    throw PrecisionError("hurwitz_zeta: remainder bound did not reach tolerance");
}

}  // namespace

Cplx hurwitz_zeta(const Cplx& s, const Real& a, const PrecisionConfig& cfg, Real* err_bound) {
    WorkingPrec wp(cfg.bits);
    return hurwitz_impl(s, a, cfg, false, err_bound);
}

Cplx hurwitz_zeta_reg(const Cplx& s, const Real& a, const PrecisionConfig& cfg) {
    WorkingPrec wp(cfg.bits);
    return hurwitz_impl(s, a, cfg, true, nullptr);
}

Cplx dirichlet_l(const Cplx& s, const DirichletCharacter& chi, const PrecisionConfig& cfg) {
    WorkingPrec wp(cfg.bits);
    std::int64_t q = chi.modulus();
    bool at_one = (s.re == Real(1L)) && s.im.is_zero();
    if (at_one && chi.is_principal()) throw PoleError("dirichlet_l: pole at s = 1");
    Cplx sum(Real(0L));
    Real rq(static_cast<long>(q));
    for (std::int64_t n = 1; n <= q; ++n) {
        const Frac& ang = chi.angle(n);
        if (ang.is_zero_value()) continue;
        Real a = Real(static_cast<long>(n)) / rq;
        // at s = 1 the character sum kills the poles, so the pole-subtracted
        // variant sums to the same value
        Cplx z = at_one ? hurwitz_zeta_reg(s, a, cfg) : hurwitz_zeta(s, a, cfg);
        sum += unit_e(Real(ang.num) / Real(ang.den)) * z;
    }
    return cpow_ln(-s, log(rq)) * sum;
}

Cplx log_gamma(const Cplx& z, const PrecisionConfig& cfg) {
    WorkingPrec wp(cfg.bits);
    if (z.im.is_zero() && !(z.re > Real(0L)) && floor(z.re) == z.re)
        throw PoleError("log_gamma: pole at nonpositive integer");
    int N = cfg.bernoulli_terms;
    // Stirling is accurate once |z| >= R0 with
    // |B_{2N}| / (2N(2N-1)) / R0^{2N-1} <= 2^{-bits-8}
    mpq_class b2n = ::abs(bernoulli(2 * static_cast<unsigned>(N)));
    double logb = std::log(::lgaps::abs(to_real(b2n, 64)).to_double());
    double log_r0 = (logb - std::log(2.0 * N * (2.0 * N - 1)) +
                     (static_cast<double>(cfg.bits) + 8) * std::log(2.0)) /
                    (2.0 * N - 1);
    Real r0(std::exp(log_r0));

    Cplx w = z;
    Cplx shift_log(Real(0L));
    while (abs(w) < r0) {
        shift_log += log(w);
        w += Cplx(Real(1L));
    }

    Cplx lw = log(w);
    Cplx res = (w - Cplx(Real(0.5))) * lw - w +
               Cplx(Real(0.5) * log(Real(2L) * const_pi()));
    Cplx inv_w = Cplx(Real(1L)) / w;
    Cplx inv_w2 = inv_w * inv_w;
    Cplx wpow = inv_w;  // w^{-(2k-1)} at k = 1
    for (int k = 1; k <= N; ++k) {
        mpq_class c = bernoulli(2 * static_cast<unsigned>(k)) /
                      mpq_class(2 * k * (2 * k - 1));
        res += to_real(c, z.re.precision()) * wpow;
        wpow = wpow * inv_w2;
    }
    return res - shift_log;
}

Cplx gamma_half(const Cplx& s, const PrecisionConfig& cfg) {
    return exp(log_gamma(Real(0.5) * s, cfg));
}

Cplx xi(const Cplx& s, const DirichletCharacter& chi, const PrecisionConfig& cfg) {
    if (!chi.is_primitive()) throw std::invalid_argument("xi: character must be primitive");
    Real q(static_cast<long>(chi.modulus()));
    int par = chi.is_even() ? 0 : 1;  // completed factor Gamma((s+par)/2)
    Cplx sp = s + Cplx(Real(static_cast<long>(par)));
    Cplx pre = cpow_ln(Real(0.5) * sp, log(q / const_pi()));
    return pre * gamma_half(sp, cfg) * dirichlet_l(s, chi, cfg);
}

RootNumber root_number(const DirichletCharacter& chi, const PrecisionConfig& cfg) {
    WorkingPrec wp(cfg.bits);
    if (!chi.is_primitive())
        throw std::invalid_argument("root_number: character must be primitive");
    RootNumber rn;
    Real q(static_cast<long>(chi.modulus()));
    Cplx g = gauss_sum(chi).value;
    rn.k = Cplx(sqrt(q)) / g;
    if (!chi.is_even()) rn.k = Cplx(Real(0L), Real(1L)) * rn.k;

    Real tol = sqrt(cfg.tolerance());
    if (abs(rn.k + Cplx(Real(1L))) < tol) {
        // K = -1: the principal square root sits on the branch cut, so the
        // sign of +-i is pinned by the first non-real character value
        rn.footnote_branch = true;
        for (std::int64_t n = 2; n < chi.modulus(); ++n) {
            const Frac& a = chi.angle(n);
            if (a.is_zero_value() || a.den <= 2) continue;
            int sgn = (2 * a.num < a.den) ? 1 : -1;  // sign of sin(2 pi a)
            rn.sqrt_k = Cplx(Real(0L), Real(static_cast<long>(sgn)));
            return rn;
        }
        throw std::logic_error("root_number: real character with K = -1");
    }
    rn.sqrt_k = sqrt(rn.k);
    return rn;
}

Real fe_residual(const Cplx& s, const DirichletCharacter& chi, const PrecisionConfig& cfg) {
    WorkingPrec wp(cfg.bits);
    DirichletCharacter bar = chi.conjugate();
    Cplx lhs = xi(Cplx(Real(1L)) - s, bar, cfg);
    Cplx rhs = root_number(chi, cfg).k * xi(s, chi, cfg);
    return abs(lhs - rhs);
}

Cplx u_value(const Cplx& s, const DirichletCharacter& chi, const PrecisionConfig& cfg) {
    WorkingPrec wp(cfg.bits);
    return root_number(chi, cfg).sqrt_k * xi(s, chi, cfg);
}

Real hardy_z(const Real& t, const PrecisionConfig& cfg) {
    WorkingPrec wp(cfg.bits);
    Cplx s(Real(0.5), t);
    Cplx lg = log_gamma(Cplx(Real(0.25), Real(0.5) * t), cfg);
    Real theta = lg.im - Real(0.5) * t * log(const_pi());
    Cplx z = exp(Cplx(Real(0L), theta)) * hurwitz_zeta(s, Real(1L), cfg);
    return z.re;
}

WEvaluator::WEvaluator(DirichletCharacter chi, PrecisionConfig cfg)
    : chi_(std::move(chi)), chi_bar_(chi_.conjugate()), cfg_(cfg),
      sqrt_k_(Real(1L)), quarter_pow_(1L), log_q_pi_(0L) {
    WorkingPrec wp(cfg_.bits);
    if (chi_.modulus() == 1) return;
    if (!chi_.is_primitive() || !chi_.is_even())
        throw std::invalid_argument("WEvaluator: need an even primitive character");
    sqrt_k_ = root_number(chi_, cfg_).sqrt_k;
    log_q_pi_ = log(Real(static_cast<long>(chi_.modulus())) / const_pi());
    quarter_pow_ = exp(Real(-0.25) * log_q_pi_);
}

Real WEvaluator::operator()(const Real& t) const {
    WorkingPrec wp(cfg_.bits);
    if (chi_.modulus() == 1) return hardy_z(t, cfg_);
    Cplx s(Real(0.5), t);
    Cplx w = Cplx(quarter_pow_) * (sqrt_k_ * xi(s, chi_, cfg_));
    Real scale = abs(w.re) + Real(1L);
    if (abs(w.im) > sqrt(cfg_.tolerance()) * scale)
        throw PrecisionError("WEvaluator: imaginary part of W above tolerance");
    return w.re;
}

Real WEvaluator::triple(const Real& t, const Real& kappa, const Real& big_q) const {
    Real h = kappa / log(big_q);
    return (*this)(t - h) * (*this)(t) * (*this)(t + h);
}

Real w_value(const Real& t, const DirichletCharacter& chi, const PrecisionConfig& cfg) {
    return WEvaluator(chi, cfg)(t);
}

Real f_value(const Real& t, const DirichletCharacter& chi, const Real& kappa,
             const Real& big_q, const PrecisionConfig& cfg) {
    return WEvaluator(chi, cfg).triple(t, kappa, big_q);
}

}  // namespace lgaps
