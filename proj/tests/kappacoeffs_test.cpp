#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgaps/kappacoeffs.hpp"

using namespace lgaps;

namespace {
const bool prec_init = [] { Real::set_working_bits(256); return true; }();
}

TEST_CASE("trig laurent taylor coefficients are exact") {
    TrigLaurentExpr e;
    e.add(TrigKind::cos, 1, -8, 1);
    // cos(k)/k^8 = k^-8 - k^-6/2 + k^-4/24 - ...
    CHECK(e.taylor_coeff(-8) == 1);
    CHECK(e.taylor_coeff(-7) == 0);
    CHECK(e.taylor_coeff(-6) == mpq_class(-1, 2));
    CHECK(e.taylor_coeff(-4) == mpq_class(1, 24));
    CHECK(e.taylor_coeff(0) == mpq_class(1, 40320));

    TrigLaurentExpr s;
    s.add(TrigKind::sin, 2, -9, 1);
    // sin(2k)/k^9 = 2 k^-8 - (8/6) k^-6 + ...
    CHECK(s.taylor_coeff(-8) == 2);
    CHECK(s.taylor_coeff(-6) == mpq_class(-4, 3));
    CHECK(s.taylor_coeff(-9) == 0);
}

TEST_CASE("principal part matches the negative taylor coefficients") {
    const TrigLaurentExpr& body = c_closed(0).body();
    auto princ = principal_part(body);
    CHECK_FALSE(princ.empty());
    for (const auto& [j, coeff] : princ) {
        CHECK(j >= 1);
        CHECK(coeff == body.taylor_coeff(-j));
        CHECK(coeff != 0);
    }
    // and the subtraction really removes them
    for (int n = -9; n < 0; ++n) CHECK(c_closed(0).taylor(n) == 0);
}

TEST_CASE("limits at zero are the exact rationals") {
    CHECK(c_closed(0).value_at_zero() == mpq_class(42) / mpq_class(362880));
    for (int i : {1, 2, 4, 6})
        CHECK(c_closed(i).value_at_zero() == mpq_class(3) / mpq_class(3628800));
}

TEST_CASE("index aliases collapse to four distinct coefficients") {
    CHECK(c_alias(0) == 0);
    CHECK(c_alias(1) == 1);
    CHECK(c_alias(3) == 2);
    CHECK(c_alias(5) == 4);
    CHECK(c_alias(7) == 6);
    CHECK(c_alias(8) == 6);
    CHECK(c_alias(9) == 6);
}

TEST_CASE("taylor and direct regimes agree at the crossover") {
    const MaclExpr& e = c_closed(0);
    Real k(0.5);
    Real direct = macl_eval(e, k);  // crossover uses the direct branch
    Real taylor(0L);
    Real kp(1L);
    for (int n = 0; n <= 40; ++n) {
        Real c(256, 0);
        mpq_class q = e.taylor(n);
        mpfr_set_q(c.raw(), q.get_mpq_t(), MPFR_RNDN);
        taylor += c * kp;
        kp *= k;
    }
    CHECK(abs(direct - taylor).to_double() < 1e-25);
}

TEST_CASE("evaluation is stable under extra precision") {
    Real::set_working_bits(512);
    Real hi = macl_eval(c_closed(0), Real(2L));
    Real::set_working_bits(256);
    Real lo = macl_eval(c_closed(0), Real(2L));
    CHECK(abs(hi - lo).to_double() < 1e-60);
}

TEST_CASE("assembly identity and its coefficient checks") {
    CHECK(c0_assembly_identity_holds());
    TrigLaurentExpr sum;
    int mult[] = {1, 2, 2, 1};
    for (int i = 0; i < 4; ++i) sum += mpq_class(mult[i]) * c0_assembly_part(i);
    CHECK(sum == c_closed(0).body());
    // spot checks on the four trig components
    CHECK(sum.taylor_coeff(-8) == c_closed(0).body().taylor_coeff(-8));
    TrigLaurentExpr body = c_closed(0).body();
    auto coeff = [&](TrigKind kind, int m, int p) {
        auto it = body.terms().find({static_cast<int>(kind), m, p});
        return it == body.terms().end() ? mpq_class(0) : it->second;
    };
    CHECK(coeff(TrigKind::cos, 1, -8) == 1);
    CHECK(coeff(TrigKind::sin, 1, -9) == 1);
    CHECK(coeff(TrigKind::cos, 2, -8) == mpq_class(1, 8));
    CHECK(coeff(TrigKind::sin, 2, -9) == mpq_class(-1, 2));
}

TEST_CASE("gap inequality margin is positive below the root") {
    for (int i = 1; i <= 100; ++i) {
        Real k = Real(0.1) + Real(7.2) * Real(static_cast<long>(i)) / Real(100L);
        Real h = macl_eval(c_closed(0), k) - rhs_combo(k);
        CHECK(h > Real(0L));
    }
}

TEST_CASE("the margin changes sign exactly once near the root") {
    int changes = 0;
    Real prev(0L);
    bool have_prev = false;
    for (int i = 0; i <= 100; ++i) {
        Real k = Real(7.3) + Real(0.003) * Real(static_cast<long>(i));
        Real h = macl_eval(c_closed(0), k) - rhs_combo(k);
        if (have_prev && (h.sign() != prev.sign())) ++changes;
        prev = h;
        have_prev = true;
    }
    CHECK(changes == 1);
}

TEST_CASE("root solve lands in the expected window") {
    KappaSolveResult r = solve_kappa();
    double k = r.kappa_star.to_double();
    CHECK(k > 7.40);
    CHECK(k < 7.44);
    CHECK(std::abs(r.ratio_to_2pi.to_double() - k / (2 * std::acos(-1.0))) < 1e-12);
    CHECK(std::abs(r.gap_multiplier.to_double() - 3 * r.ratio_to_2pi.to_double()) < 1e-12);
    // residual at the root is tiny
    Real h = macl_eval(c_closed(0), r.kappa_star) - rhs_combo(r.kappa_star);
    CHECK(abs(h).to_double() < 1e-10);
}
