#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "lgaps/characters.hpp"

using namespace lgaps;

namespace {
const bool prec_init = [] { Real::set_working_bits(128); return true; }();

std::int64_t euler_phi(std::int64_t q) {
    std::int64_t r = q;
    for (std::int64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        while (q % p == 0) q /= p;
        r -= r / p;
    }
    if (q > 1) r -= r / q;
    return r;
}
}  // namespace

TEST_CASE("frac reduction and addition") {
    Frac a = Frac::of(3, 12);
    CHECK(a.num == 1);
    CHECK(a.den == 4);
    Frac b = Frac::of(-1, 4);  // wraps mod 1
    CHECK(b.num == 3);
    CHECK(b.den == 4);
    Frac c = frac_add(a, b);
    CHECK(c.is_one());
    CHECK(Frac::zero_value().is_zero_value());
}

TEST_CASE("group size equals euler phi") {
    for (std::int64_t q : {1, 2, 3, 4, 8, 9, 12, 24, 36, 45, 100}) {
        auto chars = enumerate_characters(q);
        std::int64_t phi = q == 1 ? 1 : euler_phi(q);
        CHECK(static_cast<std::int64_t>(chars.size()) == phi);
    }
}

TEST_CASE("values are exactly multiplicative") {
    for (std::int64_t q : {7, 12, 36, 40}) {
        for (const auto& chi : enumerate_characters(q)) {
            for (std::int64_t m = 1; m < q; ++m)
                for (std::int64_t n = m; n < q; ++n) {
                    const Frac& lhs = chi.angle(m * n);
                    if (chi.angle(m).is_zero_value() || chi.angle(n).is_zero_value()) {
                        CHECK(lhs.is_zero_value());
                    } else {
                        CHECK(lhs == frac_add(chi.angle(m), chi.angle(n)));
                    }
                }
        }
    }
}

TEST_CASE("conductor and primitivity") {
    // mod 8: principal (cond 1), the mod-4 lift (cond 4), two primitive (cond 8)
    auto chars = enumerate_characters(8);
    int prim = 0;
    for (const auto& chi : chars) {
        if (chi.is_principal()) CHECK(chi.conductor() == 1);
        if (chi.is_primitive()) ++prim;
        CHECK(chi.modulus() % chi.conductor() == 0);
    }
    CHECK(prim == 2);
    CHECK(prim == phi_star_formula(8));
}

TEST_CASE("primitive counts: formula vs enumeration") {
    for (std::int64_t q = 1; q <= 200; ++q)
        CHECK(phi_star(q) == phi_star_formula(q));  // phi_star throws on mismatch
}

TEST_CASE("even primitive count tracks half the primitive count") {
    for (std::int64_t q = 1; q <= 500; ++q) {
        std::int64_t diff = 2 * phi_flat(q) - phi_star_formula(q);
        CHECK(diff >= -2);
        CHECK(diff <= 2);
    }
}

TEST_CASE("orthogonality: non-principal character sums vanish") {
    for (std::int64_t q = 3; q <= 100; ++q) {
        for (const auto& chi : enumerate_characters(q)) {
            if (chi.is_principal() || !chi.is_primitive()) continue;
            Cplx sum(Real(0L));
            for (std::int64_t n = 1; n <= q; ++n) sum += chi.value(n);
            CHECK(abs(sum).to_double() < 1e-25);
        }
    }
}

TEST_CASE("gauss sum norm is q for primitive characters") {
    for (std::int64_t q = 3; q <= 60; ++q) {
        for (const auto& chi : enumerate_characters(q)) {
            if (!chi.is_primitive()) continue;
            Real n = norm(gauss_sum(chi).value);
            CHECK(abs(n - Real(static_cast<long>(q))).to_double() < 1e-12);
        }
    }
}

TEST_CASE("conjugate character inverts angles") {
    for (const auto& chi : enumerate_characters(13)) {
        DirichletCharacter bar = chi.conjugate();
        for (std::int64_t n = 1; n < 13; ++n) {
            Frac s = frac_add(chi.angle(n), bar.angle(n));
            CHECK((s.is_one() || (s.num == 0 && s.den == 1)));
        }
        CHECK(bar.conductor() == chi.conductor());
        CHECK(bar.is_even() == chi.is_even());
    }
}

TEST_CASE("parity and realness flags") {
    auto chars = enumerate_characters(5);
    int even = 0, real = 0;
    for (const auto& chi : chars) {
        if (chi.is_even()) ++even;
        if (chi.is_real()) ++real;
        CHECK((chi.order() >= 1));
    }
    CHECK(even == 2);  // principal and the quadratic character
    CHECK(real == 2);
}
