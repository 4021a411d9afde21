#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace parthooks {

/* All counts and coefficients are exact; Integer is arbitrary precision. */
using Integer = mpz_class;

inline Integer binomial(unsigned long x, unsigned long d) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), x, d); /* 0 whenever x < d, 1 when d == 0 */
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/* base^exp with 0^0 = 1 */
inline Integer ui_pow(unsigned long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Integer exact_div(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw std::domain_error("exact_div: not divisible");
    return q;
}

inline std::string to_decimal(const Integer& v) { return v.get_str(); }

} // namespace parthooks
