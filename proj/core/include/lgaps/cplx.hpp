#ifndef LGAPS_CPLX_HPP
#define LGAPS_CPLX_HPP

#include "lgaps/real.hpp"

namespace lgaps {

// Complex number over Real.  log/sqrt/pow use the principal branch
// (-pi < arg <= pi).
struct Cplx {
    Real re;
    Real im;

    Cplx() = default;
    Cplx(Real r) : re(std::move(r)), im(0L) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(double r) : re(r), im(0L) {}
    Cplx(double r, double i) : re(r), im(i) {}

    Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
    Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
    Cplx& operator*=(const Cplx& o) { *this = *this * o; return *this; }
    Cplx& operator/=(const Cplx& o) { *this = *this / o; return *this; }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Real& s, const Cplx& a) { return {s * a.re, s * a.im}; }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline Real norm(const Cplx& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Cplx& z) { return sqrt(norm(z)); }
inline Cplx conj(const Cplx& z) { return {z.re, -z.im}; }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }

inline Cplx exp(const Cplx& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline Cplx log(const Cplx& z) { return {Real(0.5) * log(norm(z)), arg(z)}; }

inline Cplx sqrt(const Cplx& z) {
    Cplx half_log = log(z);
    half_log.re = Real(0.5) * half_log.re;
    half_log.im = Real(0.5) * half_log.im;
    return exp(half_log);
}

inline Cplx pow(const Cplx& z, const Cplx& w) { return exp(w * log(z)); }

// e(theta) = exp(2*pi*i*theta)
inline Cplx unit_e(const Real& theta) {
    Real a = Real(2L) * const_pi() * theta;
    return {cos(a), sin(a)};
}

}  // namespace lgaps

#endif
