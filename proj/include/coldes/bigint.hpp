#ifndef COLDES_BIGINT_HPP
#define COLDES_BIGINT_HPP

#include <gmpxx.h>

namespace coldes {

/// C(a, b) with C(a, b) = 0 whenever b < 0, b > a or a < 0.
mpz_class binomial(long a, long b);

mpz_class factorial(long n);

/// base^exponent with 0^0 = 1. exponent must be nonnegative.
mpz_class power(const mpz_class &base, long exponent);

/// base^exponent over the rationals with 0^0 = 1; a negative exponent with a
/// zero base throws domain_error.
mpq_class power(const mpq_class &base, long exponent);

/// Sign (-1)^exponent for any integer exponent.
inline int sign_power(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

} // namespace coldes

#endif
