#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lgaps/lfunc.hpp"

using namespace lgaps;

namespace {
const bool prec_init = [] { Real::set_working_bits(128); return true; }();

const PrecisionConfig kCfg{};

double dabs(const Real& r) { return abs(r).to_double(); }

const DirichletCharacter& even_primitive(const std::vector<DirichletCharacter>& chars,
                                         bool want_complex = false) {
    for (const auto& chi : chars)
        if (chi.is_primitive() && chi.is_even() && !chi.is_principal() &&
            (!want_complex || !chi.is_real()))
            return chi;
    throw std::runtime_error("no matching character");
}
}  // namespace

TEST_CASE("hurwitz zeta at s=2 matches pi^2/6 and pi^2/2") {
    Real pi = const_pi();
    Cplx two(Real(2L));
    Cplx z1 = hurwitz_zeta(two, Real(1L), kCfg);
    CHECK(dabs(z1.re - pi * pi / Real(6L)) < 1e-30);
    CHECK(dabs(z1.im) < 1e-30);

    // independent oracle for zeta(2, 1/2): direct partial sum plus the
    // integral tail 1/(N+1/2), accurate to ~N^-2/4
    Cplx zh = hurwitz_zeta(two, Real(0.5), kCfg);
    long N = 100000;
    Real partial(0L);
    for (long n = N - 1; n >= 0; --n) {
        Real d = Real(n) + Real(0.5);
        partial += Real(1L) / (d * d);
    }
    Real oracle = partial + Real(1L) / (Real(N) + Real(0.5));
    CHECK(dabs(zh.re - oracle) < 1e-9);
    CHECK(dabs(zh.re - pi * pi / Real(2L)) < 1e-30);
}

TEST_CASE("hurwitz zeta continues to s=0 as 1/2 - a") {
    Cplx z = hurwitz_zeta(Cplx(Real(0L)), Real(0.3), kCfg);
    CHECK(dabs(z.re - Real(0.2)) < 1e-25);
    CHECK(dabs(z.im) < 1e-25);
    // cross-check with a heavier Euler-Maclaurin configuration
    PrecisionConfig heavy;
    heavy.shift = 50;
    heavy.bernoulli_terms = 40;
    Cplx z2 = hurwitz_zeta(Cplx(Real(0L)), Real(0.3), heavy);
    CHECK(dabs(z.re - z2.re) < 1e-30);
}

TEST_CASE("hurwitz zeta pole and regularized variant") {
    CHECK_THROWS_AS(hurwitz_zeta(Cplx(Real(1L)), Real(1L), kCfg), PoleError);
    // zeta(s,1) - 1/(s-1) -> Euler's constant at s = 1
    Cplx g = hurwitz_zeta_reg(Cplx(Real(1L)), Real(1L), kCfg);
    CHECK(dabs(g.re - Real("0.57721566490153286060651209008240243104")) < 1e-30);
}

TEST_CASE("reported error bound is honest on a sample") {
    Real bound;
    Cplx s(Real(0.5), Real(21.3));
    Cplx v = hurwitz_zeta(s, Real(0.7), kCfg, &bound);
    PrecisionConfig heavy;
    heavy.bits = 192;
    heavy.shift = 120;
    Real::set_working_bits(192);
    Cplx ref = hurwitz_zeta(s, Real(0.7), heavy);
    Real::set_working_bits(128);
    CHECK(abs(v - ref) <= bound + Real(1e-35));
}

TEST_CASE("L(2, chi_4) is Catalan's constant") {
    auto chars = enumerate_characters(4);
    const DirichletCharacter* chi4 = nullptr;
    for (const auto& c : chars)
        if (!c.is_principal()) chi4 = &c;
    REQUIRE(chi4 != nullptr);
    Cplx v = dirichlet_l(Cplx(Real(2L)), *chi4, kCfg);
    Real catalan("0.91596559417721901505460351493238411077414937428167");
    CHECK(dabs(v.re - catalan) < 1e-30);
    CHECK(dabs(v.im) < 1e-30);
}

TEST_CASE("L(1, chi_5) for the quadratic character") {
    auto chars = enumerate_characters(5);
    const DirichletCharacter* chi = nullptr;
    for (const auto& c : chars)
        if (c.is_real() && !c.is_principal()) chi = &c;
    REQUIRE(chi != nullptr);
    Cplx v = dirichlet_l(Cplx(Real(1L)), *chi, kCfg);
    // class-number value (2/sqrt 5) log((1+sqrt 5)/2)
    Real s5 = sqrt(Real(5L));
    Real ref = Real(2L) / s5 * log((Real(1L) + s5) / Real(2L));
    CHECK(dabs(v.re - ref) < 1e-30);
}

TEST_CASE("log gamma special values") {
    Cplx lg_half = log_gamma(Cplx(Real(0.5)), kCfg);
    CHECK(dabs(lg_half.re - Real(0.5) * log(const_pi())) < 1e-35);
    Cplx g4 = exp(log_gamma(Cplx(Real(4L)), kCfg));
    CHECK(dabs(g4.re - Real(6L)) < 1e-33);
    // reflection through the recursion shift: Gamma(-1/2) = -2 sqrt(pi)
    Cplx gm = exp(log_gamma(Cplx(Real(-0.5)), kCfg));
    CHECK(dabs(gm.re + Real(2L) * sqrt(const_pi())) < 1e-33);
    CHECK_THROWS_AS(log_gamma(Cplx(Real(-3L)), kCfg), PoleError);
}

TEST_CASE("functional equation residual small at random strip points") {
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> sig(0.05, 0.95), tt(-30.0, 30.0);
    for (std::int64_t q : {5, 8, 13, 29}) {
        const auto chars = enumerate_characters(q);
        const auto& chi = even_primitive(chars);
        for (int i = 0; i < 5; ++i) {
            Cplx s(Real(sig(rng)), Real(tt(rng)));
            CHECK(fe_residual(s, chi, kCfg).to_double() < 1e-10);
        }
    }
}

TEST_CASE("U conjugation symmetry") {
    const auto chars = enumerate_characters(13);
    const auto& chi = even_primitive(chars, true);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> sig(0.1, 0.9), tt(-20.0, 20.0);
    for (int i = 0; i < 5; ++i) {
        Cplx s(Real(sig(rng)), Real(tt(rng)));
        Cplx u1 = u_value(s, chi, kCfg);
        Cplx u2 = u_value(conj(s), chi.conjugate(), kCfg);
        CHECK(abs(u1 - conj(u2)).to_double() < 1e-20);
    }
}

TEST_CASE("doubling precision sharpens the functional equation") {
    const auto chars = enumerate_characters(13);
    const auto& chi = even_primitive(chars, true);
    Cplx s(Real(0.3), Real(7.2));
    PrecisionConfig lo, hi;
    hi.bits = 256;
    Real r_lo = fe_residual(s, chi, lo);
    Real r_hi = fe_residual(s, chi, hi);
    CHECK(r_lo > Real(16L) * r_hi);
}

TEST_CASE("root number has unit modulus and real W") {
    for (std::int64_t q : {5, 8, 12, 13}) {
        const auto chars = enumerate_characters(q);
        const auto& chi = even_primitive(chars);
        RootNumber rn = root_number(chi, kCfg);
        CHECK(dabs(norm(rn.k) - Real(1L)) < 1e-30);
        CHECK(dabs(norm(rn.sqrt_k * rn.sqrt_k - rn.k)) < 1e-30);
        WEvaluator w(chi, kCfg);
        for (double t : {-11.7, 0.0, 3.3, 26.1}) CHECK_NOTHROW(w(Real(t)));
    }
}

TEST_CASE("Hardy Z has its first sign change at the known ordinate") {
    Real lo(14.0), hi(14.3);
    REQUIRE(hardy_z(lo, kCfg).sign() != hardy_z(hi, kCfg).sign());
    for (int i = 0; i < 60; ++i) {
        Real mid = Real(0.5) * (lo + hi);
        if (hardy_z(mid, kCfg).sign() == hardy_z(lo, kCfg).sign())
            lo = mid;
        else
            hi = mid;
    }
    CHECK(dabs(lo - Real("14.134725141734693790")) < 1e-8);
}

TEST_CASE("WEvaluator rejects unusable characters") {
    auto chars = enumerate_characters(9);
    for (const auto& chi : chars) {
        if (chi.modulus() == 1 || (chi.is_primitive() && chi.is_even())) continue;
        CHECK_THROWS_AS(WEvaluator(chi, kCfg), std::invalid_argument);
        break;
    }
}
