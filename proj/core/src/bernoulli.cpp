#include "lgaps/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace lgaps {

namespace {
std::mutex cache_mutex;
std::vector<mpq_class> cache;  // cache[n] = B_n

void extend_to(unsigned n) {
    // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1,j) B_j
    size_t start = cache.size();
    if (start == 0) {
        cache.emplace_back(1);
        start = 1;
    }
    for (size_t m = start; m <= n; ++m) {
        mpq_class s = 0;
        mpz_class binom = 1;  // C(m+1, j), j = 0
        for (size_t j = 0; j < m; ++j) {
            s += mpq_class(binom) * cache[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        cache.emplace_back(-s / mpq_class(static_cast<unsigned long>(m + 1)));
    }
}
}  // namespace

mpq_class bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (n >= cache.size()) extend_to(n);
    return cache[n];
}

Real to_real(const mpq_class& q, mpfr_prec_t bits) {
    Real r(bits, 0);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const mpq_class& q) { return to_real(q, Real::working_bits()); }

}  // namespace lgaps
