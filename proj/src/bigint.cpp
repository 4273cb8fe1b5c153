#include "coldes/bigint.hpp"

#include "coldes/errors.hpp"

namespace coldes {

mpz_class binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a)
    return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

mpz_class factorial(long n) {
  if (n < 0)
    throw domain_error("factorial of a negative number");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class power(const mpz_class &base, long exponent) {
  if (exponent < 0)
    throw domain_error("negative exponent in integer power");
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return out;
}

mpq_class power(const mpq_class &base, long exponent) {
  if (exponent >= 0) {
    mpq_class out(power(mpz_class(base.get_num()), exponent),
                  power(mpz_class(base.get_den()), exponent));
    out.canonicalize();
    return out;
  }
  if (base == 0)
    throw domain_error("zero raised to a negative power");
  mpq_class out(power(mpz_class(base.get_den()), -exponent),
                power(mpz_class(base.get_num()), -exponent));
  out.canonicalize();
  return out;
}

} // namespace coldes
