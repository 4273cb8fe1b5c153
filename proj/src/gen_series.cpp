#include "coldes/gen_series.hpp"

#include "coldes/errors.hpp"

namespace coldes {

namespace {

const qpolynomial &one_minus_q() {
  static const qpolynomial value{1, -1};
  return value;
}

void require_order(int n_max) {
  if (n_max < 0)
    throw domain_error("n_max must be nonnegative");
}

std::vector<qpolynomial> scaled(const qpoly_series &s) {
  std::vector<qpolynomial> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n)
    out.push_back(integral_scale(s, n));
  return out;
}

std::vector<coefficient_outcome> scaled(const xseries &s) {
  std::vector<coefficient_outcome> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n)
    out.push_back(integral_scale(s, n));
  return out;
}

} // namespace

qpoly_series p_reduced_denominator(int order) {
  // xq - x - q + e^{(q-1)x}
  qpoly_series denominator = exp_qx(order);
  denominator[0] -= qpolynomial::q();
  if (order >= 1)
    denominator[1] += qpolynomial{-1, 1};
  for (int k = 0; k <= order; ++k)
    denominator[k] = exact_divide(denominator[k], one_minus_q());
  return denominator;
}

poly_sequence_triple expand_P(int n_max) {
  require_order(n_max);
  const qpoly_series p = p_reduced_denominator(n_max).reciprocal();
  const qpoly_series x = qpoly_series::x(n_max);
  const qpoly_series one_minus_x =
      qpoly_series::constant(qpolynomial(1), n_max) - x;
  return {scaled(p), scaled(one_minus_x * p), scaled(x * p)};
}

std::vector<qpolynomial> expand_A(int r, int n_max) {
  if (r < 2)
    throw domain_error("expand_A requires r >= 2");
  require_order(n_max);
  qpoly_series denominator = qpoly_series::constant(qpolynomial(1), n_max);
  if (n_max >= 1)
    denominator[1] = -r;
  if (n_max >= 2)
    denominator[2] = qpolynomial{1, -1};
  return scaled(denominator.reciprocal());
}

g_expansion expand_G(int r, int n_max) {
  if (r < 1)
    throw domain_error("expand_G requires r >= 1");
  require_order(n_max);
  const qrational_function numerator(one_minus_q());
  // (1-x)(1-q) - (r-1) + e^{(q-1)x}
  xseries denominator = exp_series(qrational_function(qpolynomial{-1, 1}), n_max);
  denominator[0] += qrational_function(one_minus_q() - qpolynomial(r - 1));
  if (n_max >= 1)
    denominator[1] -= qrational_function(one_minus_q());

  const xseries g = denominator.reciprocal() * numerator;
  const xseries x = xseries::x(n_max);
  const xseries one_minus_x = xseries::constant(qrational_function(1), n_max) - x;
  return {scaled(g), scaled(one_minus_x * g), scaled(x * g)};
}

qpoly_series p_inner_series(int order) {
  // (1 - e^{(q-1)x}) / (q-1), coefficientwise exact in Q[q].
  qpoly_series e = exp_qx(order);
  qpoly_series inner(order);
  const qpolynomial q_minus_one{-1, 1};
  for (int k = 1; k <= order; ++k)
    inner[k] = exact_divide(-e[k], q_minus_one);
  return qpoly_series::x(order) - inner;
}

std::vector<qpolynomial> p_power_sum(int n_max) {
  require_order(n_max);
  const qpoly_series inner = p_inner_series(n_max);
  qpoly_series sum(n_max);
  qpoly_series term = qpoly_series::constant(qpolynomial(1), n_max);
  // inner has valuation 1, so powers beyond n_max vanish mod x^{n_max+1}.
  for (int i = 0; i <= n_max; ++i) {
    sum += term;
    term *= inner;
  }
  return scaled(sum);
}

bool power_sum_check(int n_max) {
  return p_power_sum(n_max) == expand_P(n_max).total;
}

} // namespace coldes
