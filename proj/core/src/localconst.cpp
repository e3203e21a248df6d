#include "lgaps/localconst.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgaps {

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<bool> comp(static_cast<size_t>(limit + 1), false);
    std::vector<std::int64_t> out;
    for (std::int64_t n = 2; n <= limit; ++n) {
        if (comp[static_cast<size_t>(n)]) continue;
        out.push_back(n);
        for (std::int64_t m = n * n; m <= limit; m += n) comp[static_cast<size_t>(m)] = true;
    }
    return out;
}

namespace {

using Poly = std::vector<mpq_class>;  // coefficients in x = 1/p

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) c.canonicalize();
    return r;
}

Poly poly_pow(const Poly& a, int n) {
    Poly r{mpq_class(1)};
    for (int i = 0; i < n; ++i) r = poly_mul(r, a);
    return r;
}

// product over p <= P of factor(1/p), where the factor polynomial has
// constant term 1 and no linear term; the tail bound uses
// |factor - 1| <= (sum |c_j|) / p^2 and sum_{p>P} p^-2 < 1/P.
EulerProductEstimate euler_product(const Poly& factor, std::int64_t P, mpfr_prec_t bits,
                                   const std::string& model) {
    if (P < 100) throw std::invalid_argument("euler_product: cutoff must be >= 100");
    if (factor[0] != 1 || factor[1] != 0)
        throw std::logic_error("euler_product: factor must be 1 + O(x^2)");
    mpq_class csum = 0;
    for (size_t j = 2; j < factor.size(); ++j) csum += abs(factor[j]);

    Real prod(bits, 0);
    mpfr_set_si(prod.raw(), 1, MPFR_RNDN);
    mpq_class fq;
    for (std::int64_t p : primes_up_to(P)) {
        // evaluate exactly in rationals, then round once
        fq = 0;
        mpq_class x(1, p);
        for (size_t j = factor.size(); j-- > 0;) fq = fq * x + factor[j];
        Real f(bits, 0);
        mpfr_set_q(f.raw(), fq.get_mpq_t(), MPFR_RNDN);
        prod *= f;
    }

    EulerProductEstimate e;
    e.prime_cutoff = P;
    e.model = model;
    Real c(bits, 0);
    mpfr_set_q(c.raw(), csum.get_mpq_t(), MPFR_RNDN);
    Real tail_log = Real(2L) * c / Real(static_cast<long>(P));
    e.tail_bound = abs(prod) * (exp(tail_log) - Real(1L));
    e.value = std::move(prod);
    return e;
}

Poly a3_factor() {
    return poly_mul(poly_pow(Poly{1, -1}, 4), Poly{1, 4, 1});
}

Poly a3_L_factor() {
    return poly_mul(poly_pow(Poly{1, -1}, 5), Poly{1, 5, -5, 14, -15, 5, 4, -4, 1});
}

}  // namespace

EulerProductEstimate a3(std::int64_t P, mpfr_prec_t bits) {
    return euler_product(a3_factor(), P, bits, "a3");
}

EulerProductEstimate a3_L(std::int64_t P, mpfr_prec_t bits) {
    return euler_product(a3_L_factor(), P, bits, "a3_L");
}

namespace {

// coefficients c_g of prod_i 1/(1 - r_i z) up to degree deg
std::vector<Cplx> geometric_product(const std::array<Cplx, 3>& ratios, int deg) {
    std::vector<Cplx> c(static_cast<size_t>(deg + 1), Cplx(Real(0L)));
    c[0] = Cplx(Real(1L));
    for (const Cplx& r : ratios) {
        for (int g = 1; g <= deg; ++g)
            c[static_cast<size_t>(g)] += r * c[static_cast<size_t>(g - 1)];
        // c now holds the running product's coefficients: new[g] = old[g] + r*new[g-1]
    }
    return c;
}

std::array<Cplx, 3> side_ratios(const ShiftTriple& shifts, std::int64_t p, int sign) {
    Real lp = log(Real(static_cast<long>(p)));
    std::array<Cplx, 3> r;
    for (size_t i = 0; i < 3; ++i) {
        Cplx expo = Cplx(Real(-0.5)) - Real(static_cast<long>(sign)) * shifts[i];
        if (abs(shifts[i].re) >= Real(0.25))
            throw std::domain_error("local factor: |Re shift| must be < 1/4");
        r[i] = exp(expo * Cplx(lp));
    }
    return r;
}

}  // namespace

Cplx b_p(const ShiftTriple& alpha, const ShiftTriple& beta, std::int64_t p, int cutoff) {
    if (cutoff < 10) throw std::invalid_argument("b_p: cutoff must be >= 10");
    int deg = cutoff / 2;
    auto a = geometric_product(side_ratios(alpha, p, 1), deg);
    auto b = geometric_product(side_ratios(beta, p, 1), deg);
    Cplx sum(Real(0L));
    for (int g = 0; g <= deg; ++g)
        sum += a[static_cast<size_t>(g)] * b[static_cast<size_t>(g)];
    return sum;
}

Cplx b_p_quadrature(const ShiftTriple& alpha, const ShiftTriple& beta, std::int64_t p,
                    int nodes) {
    auto ra = side_ratios(alpha, p, 1);
    auto rb = side_ratios(beta, p, 1);
    Cplx sum(Real(0L));
    Real n(static_cast<long>(nodes));
    Cplx one(Real(1L));
    for (int k = 0; k < nodes; ++k) {
        Cplx e = unit_e(Real(static_cast<long>(k)) / n);
        Cplx em = conj(e);
        Cplx f = one;
        for (const Cplx& r : ra) f /= one - e * r;
        for (const Cplx& r : rb) f /= one - em * r;
        sum += f;
    }
    return Cplx(Real(1L) / n) * sum;
}

mpq_class b_p_exact_zero_shift(std::int64_t p) {
    // sum_g binom(g+2,2)^2 x^g with binom(g+2,2)^2 written in the basis
    // binom(g+k,k), whose generating functions are (1-x)^{-k-1}
    // P(g) = (g^4 + 6g^3 + 13g^2 + 12g + 4)/4
    Poly target{mpq_class(1), mpq_class(3), mpq_class(13, 4), mpq_class(3, 2),
                mpq_class(1, 4)};
    std::array<mpq_class, 5> c;  // coefficients in the binomial basis
    for (int k = 4; k >= 0; --k) {
        // B_k(g) = prod_{i=1..k} (g+i) / k!
        Poly basis{mpq_class(1)};
        mpz_class kfac = 1;
        for (int i = 1; i <= k; ++i) {
            basis = poly_mul(basis, Poly{mpq_class(i), mpq_class(1)});
            kfac *= i;
        }
        for (auto& q : basis) { q /= mpq_class(kfac); q.canonicalize(); }
        c[static_cast<size_t>(k)] = target[static_cast<size_t>(k)] /
                                    basis[static_cast<size_t>(k)];
        for (size_t j = 0; j <= static_cast<size_t>(k); ++j)
            target[j] -= c[static_cast<size_t>(k)] * basis[j];
    }
    for (const auto& t : target)
        if (t != 0) throw std::logic_error("b_p_exact_zero_shift: basis change failed");

    mpq_class x(1, p);
    mpq_class inv = 1 / (1 - x);  // (1-x)^{-1}
    mpq_class result = 0, power = inv;
    for (int k = 0; k <= 4; ++k) {
        result += c[static_cast<size_t>(k)] * power;
        power *= inv;
    }
    result.canonicalize();
    return result;
}

Cplx z_p_inv(const ShiftTriple& alpha, const ShiftTriple& beta, std::int64_t p) {
    Real lp = log(Real(static_cast<long>(p)));
    Cplx prod(Real(1L));
    for (const Cplx& a : alpha)
        for (const Cplx& b : beta) {
            Cplx expo = (Cplx(Real(-1L)) - a - b) * Cplx(lp);
            prod *= Cplx(Real(1L)) - exp(expo);
        }
    return prod;
}

EulerProductEstimate a_partial(const ShiftTriple& alpha, const ShiftTriple& beta,
                               std::int64_t P, mpfr_prec_t bits) {
    if (P < 100) throw std::invalid_argument("a_partial: cutoff must be >= 100");
    mpfr_prec_t saved = Real::working_bits();
    Real::set_working_bits(bits);
    EulerProductEstimate e;
    e.prime_cutoff = P;
    e.model = "a_partial";
    try {
        Cplx prod(Real(1L));
        Real envelope(0L);
        int sampled = 0;
        for (std::int64_t p : primes_up_to(P)) {
            // deepen the convolution for small p so the geometric tail stays
            // far below the product's target accuracy
            int cutoff = std::max(60, 2 * static_cast<int>(
                120.0 / std::log2(static_cast<double>(p)) + 1.0));
            Cplx f = b_p(alpha, beta, p, cutoff) * z_p_inv(alpha, beta, p);
            prod *= f;
            if (sampled < 30) {
                Real dev = abs(f - Cplx(Real(1L))) * Real(static_cast<long>(p * p));
                if (dev > envelope) envelope = dev;
                ++sampled;
            }
        }
        Real tail_log = Real(3L) * envelope / Real(static_cast<long>(P));
        e.tail_bound = abs(prod) * (exp(tail_log) - Real(1L));
        e.value = prod.re;  // real for conjugate-symmetric shifts; report Re
        Real::set_working_bits(saved);
    } catch (...) {
        Real::set_working_bits(saved);
        throw;
    }
    return e;
}

std::vector<std::int64_t> phi_star_sieve(std::int64_t limit) {
    // smallest prime factor sieve, then the multiplicative formula
    std::vector<std::int32_t> spf(static_cast<size_t>(limit + 1), 0);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (spf[static_cast<size_t>(p)]) continue;
        for (std::int64_t m = p; m <= limit; m += p)
            if (!spf[static_cast<size_t>(m)]) spf[static_cast<size_t>(m)] = static_cast<std::int32_t>(p);
    }
    std::vector<std::int64_t> out(static_cast<size_t>(limit + 1), 0);
    out[1] = 1;
    for (std::int64_t q = 2; q <= limit; ++q) {
        std::int64_t n = q, v = 1;
        while (n > 1) {
            std::int64_t p = spf[static_cast<size_t>(n)], pk = 1;
            int k = 0;
            while (n % p == 0) { n /= p; pk *= p; ++k; }
            v *= (k == 1) ? p - 2 : pk / (p * p) * (p - 1) * (p - 1);
        }
        out[static_cast<size_t>(q)] = v;
    }
    return out;
}

std::vector<std::int64_t> phi_flat_sieve(std::int64_t limit) {
    size_t n = static_cast<size_t>(limit + 1);
    // Euler phi and Moebius by sieve
    std::vector<std::int64_t> phi(n), mu(n, 1);
    for (size_t i = 0; i < n; ++i) phi[i] = static_cast<std::int64_t>(i);
    std::vector<bool> comp(n, false);
    for (size_t p = 2; p < n; ++p) {
        if (comp[p]) continue;
        for (size_t m = p; m < n; m += p) {
            if (m > p) comp[m] = true;
            phi[m] -= phi[m] / static_cast<std::int64_t>(p);
            mu[m] = (m / p) % p == 0 ? 0 : -mu[m];
        }
    }
    // E(d) = phi(d)/2 for d > 2, E(1) = E(2) = 1;
    // phi_flat(q) = sum_{d|q} mu(q/d) E(d)
    std::vector<std::int64_t> e(n, 0), out(n, 0);
    for (size_t d = 1; d < n; ++d) e[d] = d > 2 ? phi[d] / 2 : 1;
    for (size_t d = 1; d < n; ++d)
        for (size_t q = d; q < n; q += d) out[q] += mu[q / d] * e[d];
    return out;
}

SlopeFit slope_fit(std::int64_t x_max) {
    if (x_max < 10000) throw std::invalid_argument("slope_fit: x_max must be >= 10^4");
    auto pstar = phi_star_sieve(x_max);
    auto pflat = phi_flat_sieve(x_max);

    // log-spaced checkpoints on [x_max/100, x_max]
    const int n_checks = 40;
    std::vector<std::int64_t> checks;
    double lo = std::log(static_cast<double>(x_max) / 100.0);
    double hi = std::log(static_cast<double>(x_max));
    for (int i = 0; i < n_checks; ++i)
        checks.push_back(static_cast<std::int64_t>(
            std::exp(lo + (hi - lo) * i / (n_checks - 1))));
    checks.back() = x_max;

    // smallest prime factor for the per-q local product
    std::vector<std::int32_t> spf(static_cast<size_t>(x_max + 1), 0);
    for (std::int64_t p = 2; p <= x_max; ++p) {
        if (spf[static_cast<size_t>(p)]) continue;
        for (std::int64_t m = p; m <= x_max; m += p)
            if (!spf[static_cast<size_t>(m)]) spf[static_cast<size_t>(m)] = static_cast<std::int32_t>(p);
    }

    SlopeFit fit;
    double s = 0, h2 = 0;
    size_t next = 0;
    for (std::int64_t q = 1; q <= x_max; ++q) {
        double local = 1.0;
        std::int64_t n = q;
        while (n > 1) {
            std::int64_t pi = spf[static_cast<size_t>(n)];
            while (n % pi == 0) n /= pi;
            double p = static_cast<double>(pi);
            double om = 1.0 - 1.0 / p;
            local *= om * om * om * om * om / (1.0 + 4.0 / p + 1.0 / (p * p));
        }
        double dq = static_cast<double>(q);
        s += static_cast<double>(pstar[static_cast<size_t>(q)]) / (dq * dq) * local;
        h2 += static_cast<double>(pflat[static_cast<size_t>(q)]) / dq * local;
        while (next < checks.size() && q == checks[next]) {
            fit.xs.push_back(dq);
            fit.values.push_back(s);
            ++next;
        }
    }
    fit.h2_over_t = h2 / static_cast<double>(x_max);

    // least squares of S against log x
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t m = fit.xs.size();
    for (size_t i = 0; i < m; ++i) {
        double lx = std::log(fit.xs[i]);
        sx += lx;
        sy += fit.values[i];
        sxx += lx * lx;
        sxy += lx * fit.values[i];
    }
    double dm = static_cast<double>(m);
    fit.slope = (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / dm;
    for (size_t i = 0; i < m; ++i)
        fit.residuals.push_back(fit.values[i] -
                                (fit.slope * std::log(fit.xs[i]) + fit.intercept));
    return fit;
}

}  // namespace lgaps
