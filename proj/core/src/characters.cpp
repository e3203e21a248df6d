#include "lgaps/characters.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace lgaps {

Frac Frac::of(std::int64_t n, std::int64_t d) {
    if (d <= 0) throw std::invalid_argument("Frac::of: denominator must be positive");
    n %= d;
    if (n < 0) n += d;
    std::int64_t g = std::gcd(n, d);
    if (n == 0) return {0, 1};
    return {n / g, d / g};
}

Frac frac_add(const Frac& a, const Frac& b) {
    if (a.is_zero_value() || b.is_zero_value()) return Frac::zero_value();
    std::int64_t d = std::lcm(a.den, b.den);
    return Frac::of(a.num * (d / a.den) + b.num * (d / b.den), d);
}

namespace {

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) { n /= p; ++k; }
            f.push_back({p, k});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::int64_t euler_phi_pp(std::int64_t p, int k) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    return pk - pk / p;
}

// (Z/q)^* as a product of cyclic factors: generator orders plus a full
// discrete-log table mapping each unit residue to its exponent tuple.
struct UnitGroup {
    std::vector<std::int64_t> orders;
    std::unordered_map<std::int64_t, std::vector<std::int64_t>> dlog;
};

std::int64_t primitive_root(std::int64_t p, int k) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::int64_t phi = euler_phi_pp(p, k);
    auto pf = factorize(phi);
    for (std::int64_t g = 2; g < pk; ++g) {
        if (std::gcd(g, pk) != 1) continue;
        bool ok = true;
        for (auto& [q, e] : pf) {
            if (pow_mod(g, phi / q, pk) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

// CRT-lift a residue r mod m to x mod q with x = r (mod m), x = 1 (mod q/m).
std::int64_t crt_lift(std::int64_t r, std::int64_t m, std::int64_t q) {
    if (m == q) return r % q;
    for (std::int64_t x = r % m; ; x += m) {
        std::int64_t xm = ((x % q) + q) % q;
        if (xm % (q / m) == 1 % (q / m)) return xm;
    }
}

UnitGroup unit_group(std::int64_t q) {
    std::vector<std::int64_t> gens;
    UnitGroup g;
    for (auto& [p, k] : factorize(q)) {
        std::int64_t pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (p == 2) {
            if (k == 1) continue;  // trivial
            if (k == 2) {
                gens.push_back(crt_lift(3, 4, q));
                g.orders.push_back(2);
            } else {
                gens.push_back(crt_lift(pk - 1, pk, q));
                g.orders.push_back(2);
                gens.push_back(crt_lift(5, pk, q));
                g.orders.push_back(pk / 4);
            }
        } else {
            gens.push_back(crt_lift(primitive_root(p, k), pk, q));
            g.orders.push_back(euler_phi_pp(p, k));
        }
    }
    // full discrete-log table: walk every exponent tuple once
    std::int64_t count = 1;
    for (auto o : g.orders) count *= o;
    std::vector<std::int64_t> exps(gens.size(), 0);
    for (std::int64_t i = 0; i < count; ++i) {
        std::int64_t x = 1 % q;
        for (size_t j = 0; j < gens.size(); ++j) x = x * pow_mod(gens[j], exps[j], q) % q;
        g.dlog.emplace(x, exps);
        for (size_t j = gens.size(); j-- > 0;) {
            if (++exps[j] < g.orders[j]) break;
            exps[j] = 0;
        }
    }
    return g;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::int64_t q, std::vector<Frac> angles,
                                       std::int64_t index)
    : q_(q), conductor_(q), index_(index), angles_(std::move(angles)) {
    even_ = q_ == 1 || angles_[static_cast<size_t>((q_ - 1) % q_)].is_one();
    // conductor: smallest d | q with chi(n) = 1 for all n = 1 (mod d), (n,q)=1
    for (std::int64_t d = 1; d <= q_; ++d) {
        if (q_ % d != 0) continue;
        bool ok = true;
        for (std::int64_t n = 1 + d; n <= q_ && ok; n += d) {
            const Frac& a = angles_[static_cast<size_t>(n % q_)];
            if (!a.is_zero_value() && !a.is_one()) ok = false;
        }
        if (ok) { conductor_ = d; break; }
    }
}

bool DirichletCharacter::is_principal() const {
    for (const Frac& a : angles_)
        if (!a.is_zero_value() && !a.is_one()) return false;
    return true;
}

bool DirichletCharacter::is_real() const {
    for (const Frac& a : angles_)
        if (!a.is_zero_value() && a.den > 2) return false;
    return true;
}

const Frac& DirichletCharacter::angle(std::int64_t n) const {
    n %= q_;
    if (n < 0) n += q_;
    return angles_[static_cast<size_t>(n)];
}

Cplx DirichletCharacter::value(std::int64_t n) const {
    const Frac& a = angle(n);
    if (a.is_zero_value()) return Cplx(Real(0L));
    return unit_e(Real(a.num) / Real(a.den));
}

std::int64_t DirichletCharacter::order() const {
    std::int64_t ord = 1;
    for (const Frac& a : angles_)
        if (!a.is_zero_value()) ord = std::lcm(ord, a.den);
    return ord;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<Frac> neg(angles_.size());
    for (size_t i = 0; i < angles_.size(); ++i) {
        const Frac& a = angles_[i];
        neg[i] = a.is_zero_value() ? Frac::zero_value() : Frac::of(-a.num, a.den);
    }
    return DirichletCharacter(q_, std::move(neg), -1);
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t q) {
    if (q < 1) throw std::invalid_argument("enumerate_characters: q must be positive");
    auto group = unit_group(q);
    std::int64_t count = 1;
    for (auto o : group.orders) count *= o;

    std::vector<DirichletCharacter> chars;
    chars.reserve(static_cast<size_t>(count));
    std::vector<std::int64_t> exps(group.orders.size(), 0);
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<Frac> angles(static_cast<size_t>(q), Frac::zero_value());
        for (auto& [n, dlog] : group.dlog) {
            Frac a = Frac::of(0, 1);
            for (size_t i = 0; i < group.orders.size(); ++i)
                a = frac_add(a, Frac::of(exps[i] * dlog[i], group.orders[i]));
            angles[static_cast<size_t>(n)] = a;
        }
        chars.emplace_back(q, std::move(angles), idx);
        // increment exponent tuple, last component fastest
        for (size_t i = group.orders.size(); i-- > 0;) {
            if (++exps[i] < group.orders[i]) break;
            exps[i] = 0;
        }
    }
    return chars;
}

GaussSumValue gauss_sum(const DirichletCharacter& chi) {
    std::int64_t q = chi.modulus();
    Cplx sum(Real(0L));
    for (std::int64_t l = 1; l <= q; ++l) {
        const Frac& a = chi.angle(l);
        if (a.is_zero_value()) continue;
        // chi(l) e(l/q) = e(a + l/q)
        Real theta = Real(a.num) / Real(a.den) + Real(l) / Real(q);
        sum += unit_e(theta);
    }
    return {sum, q, chi.index()};
}

std::int64_t phi_star_formula(std::int64_t q) {
    std::int64_t r = 1;
    for (auto& [p, k] : factorize(q)) {
        if (k == 1) {
            r *= p - 2;
        } else {
            std::int64_t pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            r *= pk / p / p * (p - 1) * (p - 1);
        }
    }
    return r;
}

std::int64_t phi_star(std::int64_t q) {
    std::int64_t by_enum = 0;
    for (const auto& chi : enumerate_characters(q))
        if (chi.is_primitive()) ++by_enum;
    if (by_enum != phi_star_formula(q))
        throw std::logic_error("phi_star: formula and enumeration disagree");
    return by_enum;
}

std::int64_t phi_flat(std::int64_t q) {
    std::int64_t n = 0;
    for (const auto& chi : enumerate_characters(q))
        if (chi.is_primitive() && chi.is_even()) ++n;
    return n;
}

}  // namespace lgaps
