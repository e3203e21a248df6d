#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lgaps/zeros.hpp"

using namespace lgaps;

namespace {
const bool prec_init = [] { Real::set_working_bits(128); return true; }();

const PrecisionConfig kCfg{};

DirichletCharacter even_primitive(std::int64_t q) {
    for (const auto& chi : enumerate_characters(q))
        if (chi.is_primitive() && (q == 1 || (chi.is_even() && !chi.is_principal())))
            return chi;
    throw std::runtime_error("no even primitive character");
}
}  // namespace

TEST_CASE("zeta critical-line zeros below 30") {
    // reference ordinates: 14.1347251417..., 21.0220396387..., 25.0108575801...
    WEvaluator w(even_primitive(1), kCfg);
    ZeroList z = scan_zeros(w, Real(0.1), Real(30L));
    REQUIRE(z.ordinates.size() == 3);
    const char* ref[] = {"14.134725141734693790", "21.022039638771554993",
                         "25.010857580145688763"};
    for (size_t i = 0; i < 3; ++i)
        CHECK(abs(z.ordinates[i] - Real(std::string(ref[i]))).to_double() < 1e-8);
}

TEST_CASE("rescan with halved step never loses zeros") {
    for (std::int64_t q : {1, 5, 13}) {
        WEvaluator w(even_primitive(q), kCfg);
        ZeroList coarse = scan_zeros(w, Real(0L), Real(30L));
        Real half_step = Real(0.5) * (const_pi() / (Real(4L) * log(Real(static_cast<long>(q)) * Real(33L))));
        ZeroList fine = scan_zeros(w, Real(0L), Real(30L), half_step);
        CHECK(fine.ordinates.size() >= coarse.ordinates.size());
        // and every coarse zero appears in the fine scan
        for (const Real& t : coarse.ordinates) {
            bool found = false;
            for (const Real& s : fine.ordinates)
                if (abs(t - s).to_double() < 1e-6) { found = true; break; }
            CHECK(found);
        }
    }
}

TEST_CASE("gap report totals and normalization") {
    WEvaluator w(even_primitive(5), kCfg);
    ZeroList z = scan_zeros(w, Real(0L), Real(40L));
    auto rep = gap_report(z);
    REQUIRE(rep.has_value());
    CHECK(rep->count == static_cast<long>(z.ordinates.size()) - 1);
    CHECK(rep->gaps.size() == z.ordinates.size() - 1);
    double total = 0;
    for (double g : rep->gaps) total += g;
    double span = (z.ordinates.back() - z.ordinates.front()).to_double();
    CHECK(std::abs(total - span) < 1e-9);
    double scale = std::log(5.0) / (2.0 * std::acos(-1.0));
    for (size_t i = 0; i < rep->gaps.size(); ++i)
        CHECK(std::abs(rep->normalized[i] - rep->gaps[i] * scale) < 1e-12);
    CHECK(rep->max_normalized >= rep->min_normalized);

    ZeroList empty;
    empty.q = 5;
    CHECK_FALSE(gap_report(empty).has_value());
}

TEST_CASE("gap report on a synthetic uniform grid") {
    ZeroList z;
    z.q = 7;
    Real spacing = Real(2L) * const_pi() / log(Real(7L));
    for (int i = 0; i < 12; ++i) z.ordinates.push_back(spacing * Real(i));
    auto rep = gap_report(z);
    REQUIRE(rep.has_value());
    for (double g : rep->normalized) CHECK(std::abs(g - 1.0) < 1e-12);

    ZeroList pair = z;
    pair.ordinates.resize(2);
    auto rep2 = gap_report(pair);
    REQUIRE(rep2.has_value());
    CHECK(rep2->count == 1);
}

TEST_CASE("observational gap statistics on a long scan") {
    // recorded, not pass/fail: both sub-average and super-average normalized
    // gaps occur, and the largest one found is reported
    WEvaluator w(even_primitive(5), kCfg);
    ZeroList z = scan_zeros(w, Real(0L), Real(200L));
    auto rep = gap_report(z);
    REQUIRE(rep.has_value());
    CHECK(rep->min_normalized < 1.0);
    CHECK(rep->max_normalized > 1.0);
    MESSAGE("q=5, t in [0,200]: ", z.ordinates.size(), " zeros, max normalized gap ",
            rep->max_normalized, ", min ", rep->min_normalized);
}

TEST_CASE("zero counts track the counting formula") {
    CountCheck c = count_vs_formula(even_primitive(5), 30.0, kCfg);
    CHECK(c.ok);
    CHECK(std::abs(c.residual) <= c.envelope);
    CHECK(c.empirical > 0);
    CHECK_NOTHROW(count_vs_formula(even_primitive(5), 2.0, kCfg));
    CHECK_THROWS_AS(count_vs_formula(even_primitive(5), 1.0, kCfg), std::invalid_argument);
}

TEST_CASE("chain check accepts a dense synthetic zero set") {
    // h = kappa / log Q = 1 with kappa = 1, Q = e
    Real kappa(1L), Q(std::exp(1.0)), T(10L);
    std::vector<Real> zeros;
    for (double t = 10.2; t < 20.0; t += 0.8) zeros.push_back(Real(t));
    ChainCheck c = gap_chain_check(zeros, kappa, Q, T);
    CHECK(c.ok);
    CHECK_FALSE(c.vacuous);
    CHECK(c.gaps_ok);
    CHECK(c.endpoints_ok);
}

TEST_CASE("chain check flags a wide gap with a witness") {
    Real kappa(1L), Q(std::exp(1.0)), T(10L);
    std::vector<Real> zeros{Real(10.2), Real(11.0), Real(16.5), Real(19.0), Real(19.8)};
    ChainCheck c = gap_chain_check(zeros, kappa, Q, T);
    CHECK_FALSE(c.ok);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->right - c.witness->left > 1.0);
}

TEST_CASE("chain check is monotone under subdivision") {
    Real kappa(1L), Q(std::exp(1.0)), T(10L);
    std::vector<Real> zeros;
    for (double t = 10.2; t < 20.0; t += 0.9) zeros.push_back(Real(t));
    REQUIRE(gap_chain_check(zeros, kappa, Q, T).ok);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> pos(10.5, 19.5);
    for (int i = 0; i < 20; ++i) {
        auto enlarged = zeros;
        enlarged.insert(enlarged.begin(), Real(pos(rng)));
        CHECK(gap_chain_check(enlarged, kappa, Q, T).ok);
    }
}

TEST_CASE("chain check is vacuous without enough zeros") {
    Real kappa(1L), Q(std::exp(1.0)), T(10L);
    ChainCheck c = gap_chain_check({Real(2.0)}, kappa, Q, T);
    CHECK(c.ok);
    CHECK(c.vacuous);
}

TEST_CASE("wirtinger equality for the sine arch") {
    const int n = 801;
    Real a(0L), b = const_pi();
    std::vector<Real> y;
    for (int i = 0; i < n; ++i)
        y.push_back(sin(a + (b - a) * Real(i) / Real(n - 1)));
    WirtingerResult r = wirtinger_check(y, a, b);
    CHECK(r.ok);
    CHECK(abs(r.lhs - r.rhs).to_double() < 1e-6);
    CHECK(abs(r.lhs - const_pi() / Real(2L)).to_double() < 1e-6);
}

TEST_CASE("wirtinger holds for random endpoint-vanishing trig polynomials") {
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0), len(0.5, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
        double a = coeff(rng), L = len(rng);
        double c[5];
        for (double& x : c) x = coeff(rng);
        const int n = 401;
        std::vector<Real> y;
        for (int i = 0; i < n; ++i) {
            double t = static_cast<double>(i) / (n - 1);
            double v = 0;
            for (int k = 1; k <= 5; ++k)
                v += c[k - 1] * std::sin(k * std::acos(-1.0) * t);
            y.push_back(Real(v));
        }
        WirtingerResult r = wirtinger_check(y, Real(a), Real(a + L));
        CHECK(r.ok);
        CHECK(r.lhs <= r.rhs * Real(1.001));
    }
}

TEST_CASE("wirtinger rejects malformed samplings") {
    std::vector<Real> even(100, Real(0L));
    CHECK_THROWS_AS(wirtinger_check(even, Real(0L), Real(1L)), std::invalid_argument);
    std::vector<Real> tiny(31, Real(0L));
    CHECK_THROWS_AS(wirtinger_check(tiny, Real(0L), Real(1L)), std::invalid_argument);
}
