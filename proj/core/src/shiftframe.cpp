#include "lgaps/shiftframe.hpp"

#include <stdexcept>

#include "lgaps/lfunc.hpp"

namespace lgaps {

namespace {

struct PrecGuard {
    mpfr_prec_t saved;
    explicit PrecGuard(mpfr_prec_t bits) : saved(Real::working_bits()) {
        Real::set_working_bits(bits);
    }
    ~PrecGuard() { Real::set_working_bits(saved); }
};

Cplx imag_unit() { return Cplx(Real(0L), Real(1L)); }

}  // namespace

Dual2 Dual2::inverse() const {
    if (!std_invertible()) throw std::domain_error("Dual2::inverse: zero standard part");
    Cplx ia = Cplx(Real(1L)) / a;
    Cplx ia2 = ia * ia;
    return {ia, -(du * ia2), -(dv * ia2), -(duv * ia2) + Real(2L) * (du * dv * (ia2 * ia))};
}

Dual2 Dual2::exponential() const {
    Cplx e = exp(a);
    return {e, e * du, e * dv, e * (duv + du * dv)};
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
    if (o.k_min_ != k_min_ || o.k_max_ != k_max_)
        throw std::invalid_argument("EpsSeries: window mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

EpsSeries operator*(const EpsSeries& x, const EpsSeries& y) {
    if (x.k_min_ != y.k_min_ || x.k_max_ != y.k_max_)
        throw std::invalid_argument("EpsSeries: window mismatch");
    EpsSeries r(x.k_min_, x.k_max_);
    for (int i = x.k_min_; i <= x.k_max_; ++i) {
        const Dual2& xi = x.at(i);
        if (xi.a.is_zero() && xi.nil_zero()) continue;
        int j_lo = r.k_min_ - i < y.k_min_ ? y.k_min_ : r.k_min_ - i;
        int j_hi = r.k_max_ - i > y.k_max_ ? y.k_max_ : r.k_max_ - i;
        for (int j = j_lo; j <= j_hi; ++j) r.at(i + j) += xi * y.at(j);
    }
    return r;
}

void EpsSeries::scale(const Dual2& s) {
    for (auto& c : c_) c = c * s;
}

void base_shift_sets(ShiftSet& a, ShiftSet& b, int deriv_a, int deriv_b) {
    const int kmult[3] = {1, 0, -1};
    const int emult[3] = {1, 2, 4};
    for (int i = 0; i < 3; ++i) {
        a.s[static_cast<size_t>(i)] = {kmult[i], emult[i], Dual2()};
        b.s[static_cast<size_t>(i)] = {kmult[i], emult[i], Dual2()};
    }
    Cplx one(Real(1L));
    if (deriv_a) {
        if (deriv_a < 1 || deriv_a > 6) throw std::invalid_argument("bad derivative index");
        Dual2 u;
        u.du = one;
        (deriv_a <= 3 ? a : b).s[static_cast<size_t>((deriv_a - 1) % 3)].nil = u;
    }
    if (deriv_b) {
        if (deriv_b < 1 || deriv_b > 6) throw std::invalid_argument("bad derivative index");
        Dual2 v;
        v.dv = one;
        Shift& sh = (deriv_b <= 3 ? a : b).s[static_cast<size_t>((deriv_b - 1) % 3)];
        sh.nil = sh.nil + v;
    }
}

std::vector<SubsetPair> subset_pairs() {
    std::vector<SubsetPair> out;
    for (int size = 0; size <= 3; ++size)
        for (unsigned s = 0; s < 8; ++s) {
            if (__builtin_popcount(s) != size) continue;
            for (unsigned t = 0; t < 8; ++t) {
                if (__builtin_popcount(t) != size) continue;
                out.push_back({s, t});
            }
        }
    return out;
}

Cplx delta_xy(const std::array<Cplx, 3>& x, const std::array<Cplx, 3>& y) {
    Cplx s(Real(0L));
    for (const auto& v : x) s += v;
    for (const auto& v : y) s += v;
    return Real(0.5) * s;
}

EpsSeries r_term_series(const SubsetPair& pair, const ShiftSet& a, const ShiftSet& b,
                        const Real& kappa, const EngineConfig& cfg) {
    // X = (A \ S) u (-T), Y = (B \ T) u (-S); elements stay linear in eps
    struct Elem {
        int k, e;
        Dual2 nil;
    };
    std::vector<Elem> xs, ys;
    for (int i = 0; i < 3; ++i) {
        const Shift& sa = a.s[static_cast<size_t>(i)];
        const Shift& sb = b.s[static_cast<size_t>(i)];
        if (pair.s_mask & (1u << i))
            ys.push_back({-sa.kappa_mult, -sa.eps_mult, -sa.nil});
        else
            xs.push_back({sa.kappa_mult, sa.eps_mult, sa.nil});
        if (pair.t_mask & (1u << i))
            xs.push_back({-sb.kappa_mult, -sb.eps_mult, -sb.nil});
        else
            ys.push_back({sb.kappa_mult, sb.eps_mult, sb.nil});
    }

    // delta_{X,Y} = (sum X + sum Y)/2 = i c kappa + n eps + nilpotent
    int c2 = 0, n2 = 0;
    Dual2 dnil;
    for (const auto& e : xs) { c2 += e.k; n2 += e.e; dnil += e.nil; }
    for (const auto& e : ys) { c2 += e.k; n2 += e.e; dnil += e.nil; }
    if (c2 % 2 != 0 || n2 % 2 != 0)
        throw std::logic_error("r_term_series: half-integer exponent");
    int c = c2 / 2, n = n2 / 2;
    dnil = Dual2(Cplx(Real(0.5))) * dnil;

    // exp(delta) = exp(i c kappa) * exp(nilpotent) * sum_k (n eps)^k / k!
    EpsSeries series(cfg.low_order, cfg.order);
    Real fact(1L);
    Real rn(static_cast<long>(n));
    Real npow(1L);
    for (int k = 0; k <= cfg.order; ++k) {
        if (k > 0) {
            fact *= Real(static_cast<long>(k));
            npow *= rn;
        }
        series.at(k) = Dual2(Cplx(npow / fact));
    }
    Cplx phase = exp(Cplx(Real(0L), Real(static_cast<long>(c)) * kappa));
    series.scale(Dual2(phase) * dnil.exponential());

    // multiply by 1/(x+y) for the nine pairs
    for (const auto& x : xs)
        for (const auto& y : ys) {
            int m = x.k + y.k;
            int j = x.e + y.e;
            if (j == 0) throw std::logic_error("r_term_series: vanishing eps slope");
            Dual2 nil = x.nil + y.nil;
            EpsSeries f(cfg.low_order, cfg.order);
            if (m != 0) {
                // 1/(i m kappa + nil + j eps): geometric series
                Dual2 c0 = Dual2(Real(static_cast<long>(m)) * imag_unit() *
                                 Cplx(kappa)) + nil;
                Dual2 inv = c0.inverse();
                Dual2 ratio = Dual2(Cplx(Real(static_cast<long>(-j)))) * inv;
                Dual2 cur = inv;
                for (int k = 0; k <= cfg.order; ++k) {
                    f.at(k) = cur;
                    cur = cur * ratio;
                }
            } else {
                // 1/(nil + j eps) = sum_{r=0..2} (-1)^r nil^r / j^{r+1} eps^{-1-r}
                Real rj(static_cast<long>(j));
                f.at(-1) = Dual2(Cplx(Real(1L) / rj));
                Dual2 n1 = Dual2(Cplx(Real(-1L) / (rj * rj))) * nil;
                f.at(-2) = n1;
                f.at(-3) = Dual2(Cplx(Real(1L) / (rj * rj * rj))) * (nil * nil);
            }
            series = series * f;
        }
    return series;
}

namespace {

EpsSumResult sum_terms(const Real& kappa, int deriv_a, int deriv_b, const EngineConfig& cfg,
                       bool take_duv) {
    PrecGuard guard(cfg.bits);
    Real k(cfg.bits, 0);
    mpfr_set(k.raw(), kappa.raw(), MPFR_RNDN);

    ShiftSet a, b;
    base_shift_sets(a, b, deriv_a, deriv_b);
    EpsSeries total(cfg.low_order, cfg.order);
    for (const SubsetPair& p : subset_pairs()) total += r_term_series(p, a, b, k, cfg);

    auto slot = [&](const Dual2& d) -> const Cplx& { return take_duv ? d.duv : d.a; };
    EpsSumResult res{Real(0L), Real(0L), Real(0L)};
    for (int kk = cfg.low_order; kk < 0; ++kk) {
        Real m = abs(slot(total.at(kk)));
        if (m > res.max_negative) res.max_negative = m;
    }
    const Cplx& c0 = slot(total.at(0));
    res.value = c0.re;
    res.imag_part = abs(c0.im);

    Real tol = pow2(-static_cast<long>(cfg.bits) / 2);
    if (res.max_negative > tol)
        throw std::runtime_error("eps-series sum: negative powers failed to cancel");
    if (res.imag_part > tol)
        throw std::runtime_error("eps-series sum: eps^0 coefficient not real");
    return res;
}

}  // namespace

EpsSumResult r_sum_eps0(const Real& kappa, const EngineConfig& cfg) {
    return sum_terms(kappa, 0, 0, cfg, false);
}

EpsSumResult r_sum_deriv_eps0(const Real& kappa, int dir_i, int dir_j, const EngineConfig& cfg) {
    bool i_a_side = dir_i <= 3, j_a_side = dir_j <= 3;
    if (i_a_side == j_a_side)
        throw std::invalid_argument("r_sum_deriv_eps0: need one index per side");
    return sum_terms(kappa, dir_i, dir_j, cfg, true);
}

Cplx p_vs_r_ratio(const std::array<Cplx, 3>& x, const std::array<Cplx, 3>& y,
                  const Real& big_q, mpfr_prec_t bits) {
    PrecGuard guard(bits);
    PrecisionConfig pc;
    pc.bits = bits;
    Cplx d = delta_xy(x, y);
    // P/R = (1/pi)^delta * prod zeta(1 + x + y) (x + y)
    Cplx ratio = exp(Cplx(-log(const_pi())) * d);
    for (const auto& xv : x)
        for (const auto& yv : y) {
            Cplx s = Cplx(Real(1L)) + xv + yv;
            if ((s - Cplx(Real(1L))).is_zero())
                throw PoleError("p_vs_r_ratio: zeta pole at shift sum 0");
            ratio *= hurwitz_zeta(s, Real(1L), pc) * (xv + yv);
        }
    (void)big_q;  // Q cancels between P and R
    return ratio;
}

}  // namespace lgaps
