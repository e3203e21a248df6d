#ifndef LGAPS_REAL_HPP
#define LGAPS_REAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace lgaps {

// Arbitrary-precision real number backed by MPFR.
// Every value carries its own precision; binary operations produce a result
// at the larger of the two operand precisions.  New values default to the
// process-wide working precision (see set_working_bits).
class Real {
public:
    static void set_working_bits(mpfr_prec_t bits) { mpfr_set_default_prec(bits); }
    static mpfr_prec_t working_bits() { return mpfr_get_default_prec(); }

    Real() { mpfr_init(v_); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t bits, int /*tag*/) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    Real(double x) { mpfr_init(v_); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x) { mpfr_init(v_); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x) { mpfr_init(v_); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(unsigned long x) { mpfr_init(v_); mpfr_set_ui(v_, x, MPFR_RNDN); }
    explicit Real(const std::string& s) {
        mpfr_init(v_);
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Decimal string with enough digits to round-trip at this precision.
    std::string str() const;

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    friend Real operator-(const Real& a) {
        Real r = result_like(a);
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

private:
    using mpfr_binfun = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real result_like(const Real& a) {
        Real r(mpfr_get_prec(a.v_), 0);
        return r;
    }
    static Real binop(const Real& a, const Real& b, mpfr_binfun f) {
        mpfr_prec_t p = mpfr_get_prec(a.v_);
        mpfr_prec_t q = mpfr_get_prec(b.v_);
        Real r(p > q ? p : q, 0);
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& a, const Real& b);
Real pow_si(const Real& a, long n);
Real floor(const Real& a);
Real erf(const Real& a);
Real erfc(const Real& a);
Real const_pi();
// 2^e as a Real (e may be negative); handy for tolerance expressions.
Real pow2(long e);

}  // namespace lgaps

#endif
