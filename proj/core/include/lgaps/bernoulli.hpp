#ifndef LGAPS_BERNOULLI_HPP
#define LGAPS_BERNOULLI_HPP

#include <gmpxx.h>

#include "lgaps/real.hpp"

namespace lgaps {

// B_n as an exact rational (B_1 = -1/2); cached, grows on demand.
mpq_class bernoulli(unsigned n);

Real to_real(const mpq_class& q);
Real to_real(const mpq_class& q, mpfr_prec_t bits);

}  // namespace lgaps

#endif
