#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgaps/characters.hpp"
#include "lgaps/localconst.hpp"

using namespace lgaps;

namespace {
const bool prec_init = [] { Real::set_working_bits(128); return true; }();

ShiftTriple zero_shifts() {
    return {Cplx(Real(0L)), Cplx(Real(0L)), Cplx(Real(0L))};
}

ShiftTriple small_imag(double d) {
    return {Cplx(Real(0L), Real(d)), Cplx(Real(0L)), Cplx(Real(0L), Real(-d))};
}
}  // namespace

TEST_CASE("prime sieve") {
    auto p = primes_up_to(30);
    std::vector<std::int64_t> ref{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    CHECK(p == ref);
    CHECK(primes_up_to(1).empty());
}

TEST_CASE("euler product tail bounds nest") {
    for (auto* f : {&a3, &a3_L}) {
        EulerProductEstimate lo = (*f)(1000, 128);
        EulerProductEstimate hi = (*f)(10000, 128);
        CHECK(abs(lo.value - hi.value) < lo.tail_bound);
        CHECK(hi.tail_bound < lo.tail_bound);
    }
}

TEST_CASE("local factor closed form at zero shifts") {
    for (std::int64_t p : primes_up_to(100)) {
        mpq_class x(1, p);
        mpq_class num = 1 + 4 * x + x * x;
        mpq_class den = 1 - x;
        mpq_class ref = num / (den * den * den * den * den);
        ref.canonicalize();
        CHECK(b_p_exact_zero_shift(p) == ref);
    }
}

TEST_CASE("convolution matches the exact rational value") {
    for (std::int64_t p : {2, 3, 97}) {
        Cplx c = b_p(zero_shifts(), zero_shifts(), p, 200);
        Real ref(128, 0);
        mpq_class q = b_p_exact_zero_shift(p);
        mpfr_set_q(ref.raw(), q.get_mpq_t(), MPFR_RNDN);
        CHECK(abs(c.re - ref).to_double() < 1e-20);
        CHECK(abs(c.im).to_double() < 1e-30);
    }
}

TEST_CASE("convolution agrees with quadrature") {
    ShiftTriple a = small_imag(0.01), b = small_imag(0.01);
    Cplx quad = b_p_quadrature(a, b, 3);
    // deep cutoff: the geometric tail is far below the quadrature accuracy
    Cplx deep = b_p(a, b, 3, 120);
    CHECK(abs(deep - quad).to_double() < 1e-10);
    // the default cutoff still lands within the polynomial-factor envelope
    Cplx shallow = b_p(a, b, 3);
    CHECK(abs(shallow - quad).to_double() < 1e-8);
}

TEST_CASE("zeta factor inverse at zero shifts") {
    for (std::int64_t p : {2, 5, 31}) {
        Cplx z = z_p_inv(zero_shifts(), zero_shifts(), p);
        Real ref = pow_si(Real(1L) - Real(1L) / Real(static_cast<long>(p)), 9);
        CHECK(abs(z.re - ref).to_double() < 1e-30);
        CHECK(abs(z.im).to_double() < 1e-30);
    }
}

TEST_CASE("combined local factor approaches 1 like p^-2") {
    ShiftTriple a = small_imag(0.02), b = small_imag(0.015);
    for (std::int64_t p : primes_up_to(200)) {
        Cplx f = b_p(a, b, p, 120) * z_p_inv(a, b, p);
        double dev = abs(f - Cplx(Real(1L))).to_double();
        CHECK(dev * static_cast<double>(p) * static_cast<double>(p) < 40.0);
    }
}

TEST_CASE("shifted product collapses to the plain product at zero shifts") {
    EulerProductEstimate shifted = a_partial(zero_shifts(), zero_shifts(), 10000);
    EulerProductEstimate plain = a3(10000, 128);
    CHECK(abs(shifted.value - plain.value).to_double() < 1e-15);
}

TEST_CASE("domain guard on the shift size") {
    ShiftTriple bad{Cplx(Real(0.3)), Cplx(Real(0L)), Cplx(Real(0L))};
    CHECK_THROWS_AS(b_p(bad, zero_shifts(), 5, 60), std::domain_error);
}

TEST_CASE("sieves match the per-modulus counting functions") {
    auto star = phi_star_sieve(200);
    auto flat = phi_flat_sieve(120);
    for (std::int64_t q = 1; q <= 200; ++q) CHECK(star[static_cast<size_t>(q)] == phi_star_formula(q));
    for (std::int64_t q = 1; q <= 120; ++q) CHECK(flat[static_cast<size_t>(q)] == phi_flat(q));
}

TEST_CASE("slope fit residuals shrink with range") {
    SlopeFit f5 = slope_fit(100000);
    SlopeFit f6 = slope_fit(1000000);
    auto max_abs = [](const std::vector<double>& v) {
        double m = 0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    };
    CHECK(max_abs(f6.residuals) < max_abs(f5.residuals));
    CHECK(f6.slope > 0);
    CHECK(f6.h2_over_t > 0);
    CHECK(f6.xs.size() == 40);
    CHECK(f6.xs.back() == 1000000.0);
}
