#include "lgaps/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgaps {

namespace {

Real default_step(std::int64_t q, const Real& t) {
    Real arg = Real(static_cast<long>(q)) * (abs(t) + Real(3L));
    return Real(2L) * const_pi() / (Real(8L) * log(arg));
}

// refine a bracketing sign change [lo, hi] down to width tol
Real bisect(const WEvaluator& w, Real lo, Real hi, Real flo, const Real& tol) {
    while (hi - lo > tol) {
        Real mid = Real(0.5) * (lo + hi);
        Real fm = w(mid);
        if (fm.is_zero()) return mid;
        if ((fm.sign() > 0) == (flo.sign() > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return Real(0.5) * (lo + hi);
}

}  // namespace

ZeroList scan_zeros(const WEvaluator& w, const Real& t_lo, const Real& t_hi,
                    const Real& step, const Real& refine_tol) {
    if (!(t_lo < t_hi) && !(t_lo == t_hi))
        throw std::invalid_argument("scan_zeros: need t_lo <= t_hi");
    ZeroList out;
    out.q = w.character().modulus();
    out.chi_index = w.character().index();
    out.t_lo = t_lo;
    out.t_hi = t_hi;
    out.refine_tol = refine_tol;
    if (t_lo == t_hi) return out;

    Real t = t_lo;
    Real ft = w(t);
    while (t < t_hi) {
        Real h = (step > Real(0L)) ? step : default_step(out.q, t);
        Real t2 = t + h;
        if (t2 > t_hi) t2 = t_hi;
        Real f2 = w(t2);
        if (ft.is_zero()) {
            out.ordinates.push_back(t);
        } else if (!f2.is_zero() && ft.sign() != f2.sign()) {
            out.ordinates.push_back(bisect(w, t, t2, ft, refine_tol));
        }
        t = t2;
        ft = f2;
    }
    if (ft.is_zero()) out.ordinates.push_back(t);

    // dedup at tolerance (endpoint hits can repeat)
    std::vector<Real> dedup;
    for (const Real& z : out.ordinates) {
        if (dedup.empty() || z - dedup.back() > refine_tol) dedup.push_back(z);
    }
    out.ordinates = std::move(dedup);
    return out;
}

CountCheck count_vs_formula(const DirichletCharacter& chi, double T, const PrecisionConfig& cfg) {
    if (T < 2) throw std::invalid_argument("count_vs_formula: need T >= 2");
    WEvaluator w(chi, cfg);
    ZeroList z = scan_zeros(w, Real(-T), Real(T));
    CountCheck c;
    c.empirical = static_cast<long>(z.ordinates.size());
    double q = static_cast<double>(chi.modulus());
    double two_pi = 2.0 * std::acos(-1.0);
    c.predicted = 2.0 * (T / two_pi * std::log(T * q / two_pi) - T / two_pi);
    c.residual = static_cast<double>(c.empirical) - c.predicted;
    c.envelope = 8.0 * std::log(q * T);
    c.ok = std::abs(c.residual) <= c.envelope;
    return c;
}

std::optional<GapReport> gap_report(const ZeroList& z) {
    if (z.ordinates.size() < 2) return std::nullopt;
    GapReport r;
    double norm = std::log(static_cast<double>(z.q)) / (2.0 * std::acos(-1.0));
    for (size_t i = 0; i + 1 < z.ordinates.size(); ++i) {
        double g = (z.ordinates[i + 1] - z.ordinates[i]).to_double();
        r.gaps.push_back(g);
        r.normalized.push_back(g * norm);
    }
    r.count = static_cast<long>(r.gaps.size());
    r.max_normalized = *std::max_element(r.normalized.begin(), r.normalized.end());
    r.min_normalized = *std::min_element(r.normalized.begin(), r.normalized.end());
    return r;
}

ChainCheck gap_chain_check(const std::vector<Real>& wzeros, const Real& kappa,
                           const Real& big_q, const Real& T, const Real& tol) {
    ChainCheck c;
    Real h = kappa / log(big_q);
    if (wzeros.size() < 2) {
        c.ok = c.vacuous = c.gaps_ok = c.endpoints_ok = true;
        return c;
    }
    std::vector<Real> sorted = wzeros;
    std::sort(sorted.begin(), sorted.end());
    c.endpoints_ok = (sorted.front() <= T + Real(2L) * h) &&
                     (sorted.back() >= Real(2L) * T - Real(2L) * h);

    // zero multiset of f: the three shifted copies, clipped to [T+h, 2T-h]
    std::vector<Real> fz;
    Real lo = T + h, hi = Real(2L) * T - h;
    for (const Real& z : sorted)
        for (int s = -1; s <= 1; ++s) {
            Real t = z + Real(static_cast<long>(s)) * h;
            if (t >= lo && t <= hi) fz.push_back(t);
        }
    std::sort(fz.begin(), fz.end());
    c.f_zero_count = static_cast<long>(fz.size());

    c.gaps_ok = true;
    for (size_t i = 0; i + 1 < fz.size(); ++i) {
        if (fz[i + 1] - fz[i] > h + tol) {
            c.gaps_ok = false;
            c.witness = ChainWitness{fz[i].to_double(), fz[i + 1].to_double()};
            break;
        }
    }
    c.ok = c.gaps_ok && c.endpoints_ok;
    return c;
}

WirtingerResult wirtinger_check(const std::vector<Real>& y, const Real& a, const Real& b) {
    size_t n = y.size();
    if (n < 65 || n % 2 == 0)
        throw std::invalid_argument("wirtinger_check: need an odd sample count >= 65");
    if (!(a < b)) throw std::invalid_argument("wirtinger_check: need a < b");
    Real h = (b - a) / Real(static_cast<long>(n - 1));
    Real end_tol = Real(1e-9) * (abs(b - a) + Real(1L));
    if (abs(y.front()) > end_tol || abs(y.back()) > end_tol)
        throw std::invalid_argument("wirtinger_check: samples must vanish at endpoints");

    // y' by 4th-order finite differences (one-sided at the boundary)
    std::vector<Real> dy(n);
    Real inv12h = Real(1L) / (Real(12L) * h);
    auto at = [&](size_t i) -> const Real& { return y[i]; };
    dy[0] = (Real(-25L) * at(0) + Real(48L) * at(1) - Real(36L) * at(2) +
             Real(16L) * at(3) - Real(3L) * at(4)) * inv12h;
    dy[1] = (Real(-3L) * at(0) - Real(10L) * at(1) + Real(18L) * at(2) -
             Real(6L) * at(3) + at(4)) * inv12h;
    for (size_t i = 2; i + 2 < n; ++i)
        dy[i] = (at(i - 2) - Real(8L) * at(i - 1) + Real(8L) * at(i + 1) - at(i + 2)) * inv12h;
    dy[n - 2] = (Real(3L) * at(n - 1) + Real(10L) * at(n - 2) - Real(18L) * at(n - 3) +
                 Real(6L) * at(n - 4) - at(n - 5)) * inv12h;
    dy[n - 1] = (Real(25L) * at(n - 1) - Real(48L) * at(n - 2) + Real(36L) * at(n - 3) -
                 Real(16L) * at(n - 4) + Real(3L) * at(n - 5)) * inv12h;

    auto simpson_sq = [&](const std::vector<Real>& f) {
        Real s = f[0] * f[0] + f[n - 1] * f[n - 1];
        for (size_t i = 1; i + 1 < n; ++i) {
            Real w(static_cast<long>(i % 2 == 1 ? 4 : 2));
            s += w * f[i] * f[i];
        }
        return s * h / Real(3L);
    };

    WirtingerResult r;
    r.lhs = simpson_sq(y);
    Real scale = (b - a) / const_pi();
    r.rhs = scale * scale * simpson_sq(dy);
    r.ok = r.lhs <= r.rhs * Real(1.001);
    return r;
}

}  // namespace lgaps
