#include "lgaps/real.hpp"

#include <cstdlib>
#include <cstring>

namespace lgaps {

namespace {
using mpfr_unfun = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
Real unop(const Real& a, mpfr_unfun f) {
    Real r(a.precision(), 0);
    f(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
}  // namespace

std::string Real::str() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    // digits = ceil(prec * log10(2)) + 2
    size_t digits = static_cast<size_t>(mpfr_get_prec(v_) * 0.30103) + 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    // strip trailing zeros of the mantissa
    size_t last = body.find_last_not_of('0');
    if (last != std::string::npos) body.erase(last + 1);
    if (body.empty()) body = "0";
    std::string out = (neg ? "-" : "");
    out += "0.";
    out += body;
    out += "e";
    out += std::to_string(static_cast<long>(e));
    return out;
}

Real abs(const Real& a) { return unop(a, mpfr_abs); }
Real sqrt(const Real& a) { return unop(a, mpfr_sqrt); }
Real exp(const Real& a) { return unop(a, mpfr_exp); }
Real log(const Real& a) { return unop(a, mpfr_log); }
Real sin(const Real& a) { return unop(a, mpfr_sin); }
Real cos(const Real& a) { return unop(a, mpfr_cos); }
Real floor(const Real& a) {
    Real r(a.precision(), 0);
    mpfr_floor(r.raw(), a.raw());
    return r;
}
Real erf(const Real& a) { return unop(a, mpfr_erf); }
Real erfc(const Real& a) { return unop(a, mpfr_erfc); }

Real atan2(const Real& y, const Real& x) {
    mpfr_prec_t p = y.precision() > x.precision() ? y.precision() : x.precision();
    Real r(p, 0);
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& a, const Real& b) {
    mpfr_prec_t p = a.precision() > b.precision() ? a.precision() : b.precision();
    Real r(p, 0);
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real pow_si(const Real& a, long n) {
    Real r(a.precision(), 0);
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}

Real const_pi() {
    Real r;
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real pow2(long e) {
    Real r(1L);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

}  // namespace lgaps
