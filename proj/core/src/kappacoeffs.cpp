#include "lgaps/kappacoeffs.hpp"

#include "lgaps/bernoulli.hpp"  // to_real

namespace lgaps {

namespace {

mpz_class ipow(long base, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace

void TrigLaurentExpr::add(TrigKind kind, int multiple, int power, const mpq_class& coeff) {
    Key key{static_cast<int>(kind), multiple, power};
    mpq_class& c = terms_[key];
    c += coeff;
    c.canonicalize();
    if (c == 0) terms_.erase(key);
}

TrigLaurentExpr& TrigLaurentExpr::operator+=(const TrigLaurentExpr& o) {
    for (const auto& [k, c] : o.terms_)
        add(static_cast<TrigKind>(std::get<0>(k)), std::get<1>(k), std::get<2>(k), c);
    return *this;
}

TrigLaurentExpr operator*(const mpq_class& s, const TrigLaurentExpr& e) {
    TrigLaurentExpr r;
    if (s == 0) return r;
    for (const auto& [k, c] : e.terms_) r.terms_[k] = s * c;
    return r;
}

bool operator==(const TrigLaurentExpr& a, const TrigLaurentExpr& b) {
    return a.terms_ == b.terms_;
}

mpq_class TrigLaurentExpr::taylor_coeff(int n) const {
    mpq_class out = 0;
    for (const auto& [key, c] : terms_) {
        auto [kind, m, p] = key;
        int r = n - p;  // trig expansion order contributing to k^n
        if (r < 0) continue;
        if (kind == static_cast<int>(TrigKind::cos)) {
            if (r % 2 != 0) continue;
            if (m == 0 && r > 0) continue;
            mpq_class t(ipow(m == 0 ? 1 : m, static_cast<unsigned>(r)),
                        factorial(static_cast<unsigned>(r)));
            t.canonicalize();
            if ((r / 2) % 2 == 1) t = -t;
            out += c * t;
        } else {
            if (r % 2 != 1 || m == 0) continue;
            mpq_class t(ipow(m, static_cast<unsigned>(r)), factorial(static_cast<unsigned>(r)));
            t.canonicalize();
            if (((r - 1) / 2) % 2 == 1) t = -t;
            out += c * t;
        }
    }
    out.canonicalize();
    return out;
}

Real TrigLaurentExpr::eval(const Real& k) const {
    Real sum(0L);
    for (const auto& [key, c] : terms_) {
        auto [kind, m, p] = key;
        Real trig = (kind == static_cast<int>(TrigKind::cos))
                        ? cos(Real(static_cast<long>(m)) * k)
                        : sin(Real(static_cast<long>(m)) * k);
        sum += to_real(c, k.precision()) * trig * pow_si(k, p);
    }
    return sum;
}

std::vector<std::pair<int, mpq_class>> principal_part(const TrigLaurentExpr& e) {
    int min_pow = 0;
    for (const auto& [key, c] : e.terms()) {
        int p = std::get<2>(key);
        if (p < min_pow) min_pow = p;
    }
    std::vector<std::pair<int, mpq_class>> out;
    for (int n = min_pow; n < 0; ++n) {
        mpq_class c = e.taylor_coeff(n);
        if (c != 0) out.emplace_back(-n, c);
    }
    return out;
}

MaclExpr::MaclExpr(TrigLaurentExpr body, int taylor_order)
    : body_(std::move(body)), principal_(principal_part(body_)) {
    taylor_.reserve(static_cast<size_t>(taylor_order + 1));
    for (int n = 0; n <= taylor_order; ++n) taylor_.push_back(body_.taylor_coeff(n));
}

mpq_class MaclExpr::taylor(int n) const {
    if (n < 0) return 0;
    if (static_cast<size_t>(n) < taylor_.size()) return taylor_[static_cast<size_t>(n)];
    return body_.taylor_coeff(n);
}

Real macl_eval(const MaclExpr& e, const Real& k) {
    if (k < Real(0L)) throw std::invalid_argument("macl_eval: need k >= 0");
    if (k < Real(0.5)) {
        // exact Taylor series, Horner from the top
        Real sum(0L);
        for (int n = 40; n >= 0; --n) sum = sum * k + to_real(e.taylor(n), k.precision());
        return sum;
    }
    Real sum = e.body().eval(k);
    for (const auto& [j, c] : e.principal()) sum -= to_real(c, k.precision()) * pow_si(k, -j);
    return sum;
}

namespace {

TrigLaurentExpr make_body(int which) {
    auto q = [](long n, long d) { return mpq_class(n, d); };
    TrigLaurentExpr e;
    const TrigKind C = TrigKind::cos, S = TrigKind::sin;
    switch (which) {
        case 0:
            e.add(C, 1, -8, q(1, 1));
            e.add(S, 1, -9, q(1, 1));
            e.add(C, 2, -8, q(1, 8));
            e.add(S, 2, -9, q(-1, 2));
            break;
        case 1:
            e.add(C, 1, -8, q(-1, 4));
            e.add(S, 1, -9, q(3, 4));
            e.add(C, 1, -10, q(1, 1));
            e.add(S, 1, -11, q(-1, 1));
            e.add(C, 2, -8, q(1, 96));
            e.add(S, 2, -9, q(-1, 8));
            e.add(C, 2, -10, q(-1, 2));
            e.add(S, 2, -11, q(1, 2));
            break;
        case 2:
            e.add(S, 1, -9, q(-3, 4));
            e.add(C, 1, -10, q(-11, 4));
            e.add(S, 1, -11, q(-21, 4));
            e.add(C, 2, -8, q(1, 32));
            e.add(S, 2, -9, q(-3, 8));
            e.add(C, 2, -10, q(-53, 32));
            e.add(S, 2, -11, q(21, 8));
            break;
        case 4:
            e.add(C, 1, -8, q(-1, 12));
            e.add(S, 1, -9, q(5, 4));
            e.add(C, 1, -10, q(3, 1));
            e.add(S, 1, -11, q(5, 1));
            e.add(C, 2, -8, q(-1, 32));
            e.add(S, 2, -9, q(3, 8));
            e.add(C, 2, -10, q(13, 8));
            e.add(S, 2, -11, q(-5, 2));
            break;
        case 6:
            e.add(C, 1, -8, q(1, 8));
            e.add(S, 1, -9, q(-3, 8));
            e.add(C, 1, -10, q(-5, 4));
            e.add(S, 1, -11, q(-3, 4));
            e.add(C, 2, -10, q(-1, 16));
            e.add(S, 2, -11, q(3, 8));
            break;
        default:
            throw std::invalid_argument("c_closed: which must be 0, 1, 2, 4 or 6");
    }
    return e;
}

}  // namespace

const MaclExpr& c_closed(int which) {
    static const MaclExpr c0(make_body(0)), c1(make_body(1)), c2(make_body(2)),
        c4(make_body(4)), c6(make_body(6));
    switch (which) {
        case 0: return c0;
        case 1: return c1;
        case 2: return c2;
        case 4: return c4;
        case 6: return c6;
        default: throw std::invalid_argument("c_closed: which must be 0, 1, 2, 4 or 6");
    }
}

int c_alias(int i) {
    switch (i) {
        case 0: case 1: case 2: case 4: case 6: return i;
        case 3: return 2;
        case 5: return 4;
        case 7: case 8: case 9: return 6;
        default: throw std::invalid_argument("c_alias: index must be 0..9");
    }
}

Real rhs_combo(const Real& k) {
    Real sum = macl_eval(c_closed(1), k) + Real(2L) * macl_eval(c_closed(2), k) +
               Real(2L) * macl_eval(c_closed(4), k) + Real(4L) * macl_eval(c_closed(6), k);
    Real pre = k / const_pi();
    return pre * pre * sum;
}

TrigLaurentExpr c0_assembly_part(int i) {
    auto q = [](long n, long d) { return mpq_class(n, d); };
    TrigLaurentExpr e;
    switch (i) {
        case 0:
            e.add(TrigKind::cos, 2, -8, q(5, 32));
            e.add(TrigKind::sin, 2, -9, q(-5, 8));
            break;
        case 1:
            e.add(TrigKind::cos, 1, -8, q(2, 5));
            e.add(TrigKind::sin, 1, -9, q(-19, 20));
            break;
        case 2:
            e.add(TrigKind::cos, 1, -8, q(1, 10));
            e.add(TrigKind::sin, 1, -9, q(29, 20));
            break;
        case 3:
            e.add(TrigKind::cos, 2, -8, q(-1, 32));
            e.add(TrigKind::sin, 2, -9, q(1, 8));
            break;
        default:
            throw std::invalid_argument("c0_assembly_part: index must be 0..3");
    }
    return e;
}

bool c0_assembly_identity_holds() {
    TrigLaurentExpr sum = c0_assembly_part(0);
    sum += mpq_class(2) * c0_assembly_part(1);
    sum += mpq_class(2) * c0_assembly_part(2);
    sum += c0_assembly_part(3);
    return sum == c_closed(0).body();
}

KappaSolveResult solve_kappa(const Real& tol) {
    if (!(tol > Real(0L))) throw std::invalid_argument("solve_kappa: tol must be positive");
    auto h = [](const Real& k) { return macl_eval(c_closed(0), k) - rhs_combo(k); };

    Real lo, hi, flo;
    bool found = false;
    Real prev_k(0.1);
    Real prev_f = h(prev_k);
    for (int i = 2; i <= 200; ++i) {
        Real k = Real(static_cast<long>(i)) * Real(0.1);
        Real f = h(k);
        if (!prev_f.is_zero() && !f.is_zero() && prev_f.sign() != f.sign()) {
            lo = prev_k;
            hi = k;
            flo = prev_f;
            found = true;
            break;
        }
        prev_k = k;
        prev_f = f;
    }
    if (!found) throw SolverError("solve_kappa: no sign change on [0.1, 20]");

    while (hi - lo > tol) {
        Real mid = Real(0.5) * (lo + hi);
        Real fm = h(mid);
        if (fm.is_zero()) { lo = hi = mid; break; }
        if (fm.sign() == flo.sign()) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }

    KappaSolveResult r{Real(0.5) * (lo + hi), Real(0L), Real(0L)};
    Real two_pi = Real(2L) * const_pi();
    r.ratio_to_2pi = r.kappa_star / two_pi;
    r.gap_multiplier = Real(3L) * r.kappa_star / two_pi;
    return r;
}

}  // namespace lgaps
