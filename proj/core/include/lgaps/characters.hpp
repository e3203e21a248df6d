#ifndef LGAPS_CHARACTERS_HPP
#define LGAPS_CHARACTERS_HPP

#include <cstdint>
#include <vector>

#include "lgaps/cplx.hpp"

namespace lgaps {

// Exact rational angle theta = num/den (mod 1); a character value is
// e(theta) = exp(2*pi*i*theta).  den == 0 marks the value 0 (non-unit).
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 0;

    static Frac zero_value() { return {0, 0}; }
    static Frac of(std::int64_t n, std::int64_t d);  // reduced, 0 <= num < den
    bool is_zero_value() const { return den == 0; }
    bool is_one() const { return den == 1; }
    friend bool operator==(const Frac& a, const Frac& b) = default;
};

Frac frac_add(const Frac& a, const Frac& b);

class DirichletCharacter {
public:
    DirichletCharacter(std::int64_t q, std::vector<Frac> angles, std::int64_t index);

    std::int64_t modulus() const { return q_; }
    std::int64_t conductor() const { return conductor_; }
    std::int64_t index() const { return index_; }
    bool is_primitive() const { return conductor_ == q_; }
    bool is_principal() const;
    bool is_even() const { return even_; }
    // true iff every value is 0 or +-1
    bool is_real() const;

    // exact angle of chi(n); n may be any integer
    const Frac& angle(std::int64_t n) const;
    // chi(n) at the current working precision
    Cplx value(std::int64_t n) const;
    // order of chi in the character group
    std::int64_t order() const;

    DirichletCharacter conjugate() const;

private:
    std::int64_t q_;
    std::int64_t conductor_;
    std::int64_t index_;
    bool even_;
    std::vector<Frac> angles_;
};

// All phi(q) characters mod q, ordered lexicographically by generator
// exponents over the CRT components of (Z/q)^*.
std::vector<DirichletCharacter> enumerate_characters(std::int64_t q);

struct GaussSumValue {
    Cplx value;
    std::int64_t modulus;
    std::int64_t chi_index;
};

// G(1,chi) = sum_l chi(l) e(l/q)
GaussSumValue gauss_sum(const DirichletCharacter& chi);

// Number of primitive characters mod q, via the multiplicative formula
// phi*(p) = p-2, phi*(p^k) = p^k (1-1/p)^2.  Cross-checked against
// enumeration in phi_star.
std::int64_t phi_star_formula(std::int64_t q);
// Same count by enumeration; throws if the two routes disagree.
std::int64_t phi_star(std::int64_t q);
// Number of even primitive characters mod q, by enumeration.
std::int64_t phi_flat(std::int64_t q);

}  // namespace lgaps

#endif
