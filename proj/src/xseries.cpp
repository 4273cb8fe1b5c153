#include "coldes/xseries.hpp"

namespace coldes {

namespace {

qpolynomial scale_to_integers(const qpolynomial &coefficient, int n) {
  qpolynomial out = coefficient * mpq_class(factorial(n));
  if (!out.has_integer_coefficients())
    throw integrality_error("n! times the coefficient of x^" +
                            std::to_string(n) + " is " + to_string(out) +
                            ", which has a non-integer coefficient");
  return out;
}

} // namespace

qpolynomial integral_scale(const qpoly_series &s, int n) {
  return scale_to_integers(s[n], n);
}

coefficient_outcome integral_scale(const xseries &s, int n) {
  const qrational_function &c = s[n];
  if (const auto poly = c.as_polynomial())
    return scale_to_integers(*poly, n);
  return non_polynomial_coefficient{
      n, c * qrational_function(qpolynomial(mpq_class(factorial(n))))};
}

} // namespace coldes
