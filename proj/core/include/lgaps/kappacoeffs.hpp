#ifndef LGAPS_KAPPACOEFFS_HPP
#define LGAPS_KAPPACOEFFS_HPP

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <vector>

#include "lgaps/real.hpp"

namespace lgaps {

enum class TrigKind { cos = 0, sin = 1 };

// Finite sum of terms  c * trig(m*k) * k^p  with exact rational c,
// m in {0,1,2}, p any integer (negative powers allowed).
class TrigLaurentExpr {
public:
    using Key = std::tuple<int, int, int>;  // (kind, multiple, power)

    void add(TrigKind kind, int multiple, int power, const mpq_class& coeff);
    const std::map<Key, mpq_class>& terms() const { return terms_; }

    TrigLaurentExpr& operator+=(const TrigLaurentExpr& o);
    friend TrigLaurentExpr operator*(const mpq_class& s, const TrigLaurentExpr& e);
    friend bool operator==(const TrigLaurentExpr& a, const TrigLaurentExpr& b);

    // exact Taylor coefficient of k^n (expand the trig factors)
    mpq_class taylor_coeff(int n) const;
    // direct evaluation at k > 0
    Real eval(const Real& k) const;

private:
    std::map<Key, mpq_class> terms_;  // zero coefficients removed
};

// principal part: coefficients of k^{-j}, j = 1..; returned as (j, coeff)
std::vector<std::pair<int, mpq_class>> principal_part(const TrigLaurentExpr& e);

// Macl(body) = body - Princ(body): finite at k = 0.  Evaluated from the
// exact Taylor series below the crossover and directly above it.
class MaclExpr {
public:
    explicit MaclExpr(TrigLaurentExpr body, int taylor_order = 40);

    const TrigLaurentExpr& body() const { return body_; }
    const std::vector<std::pair<int, mpq_class>>& principal() const { return principal_; }
    mpq_class taylor(int n) const;  // exact Taylor coefficient of Macl at k^n
    mpq_class value_at_zero() const { return taylor(0); }

private:
    TrigLaurentExpr body_;
    std::vector<std::pair<int, mpq_class>> principal_;
    std::vector<mpq_class> taylor_;  // 0..taylor_order
};

// crossover 0.5: Taylor regime below, direct body-minus-principal above
Real macl_eval(const MaclExpr& e, const Real& k);

// The five distinct kappa-coefficients; which in {0,1,2,4,6}.  The remaining
// indices alias these: C3=C2, C5=C4, C7=C8=C9=C6 (c_alias maps 0..9).
const MaclExpr& c_closed(int which);
int c_alias(int i);

// (k/pi)^2 (C1 + 2 C2 + 2 C4 + 4 C6)
Real rhs_combo(const Real& k);

// The four partial contributions whose doubled combination reassembles the
// C0 body; index 0..3 in the order of the final display.
TrigLaurentExpr c0_assembly_part(int i);
// multiplicities (1,2,2,1) applied; true iff the sum equals the C0 body
bool c0_assembly_identity_holds();

struct KappaSolveResult {
    Real kappa_star;
    Real ratio_to_2pi;    // kappa*/2pi
    Real gap_multiplier;  // 3 kappa*/2pi
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// smallest positive root of C0(k) = rhs_combo(k): sign scan on [0.1, 20]
// with step 0.1, then bisection to tol
KappaSolveResult solve_kappa(const Real& tol = Real(1e-12));

}  // namespace lgaps

#endif
