#ifndef COLDES_GEN_SERIES_HPP
#define COLDES_GEN_SERIES_HPP

#include <vector>

#include "coldes/recurrences.hpp"
#include "coldes/xseries.hpp"

namespace coldes {

/// n!-scaled coefficients of
///   P   = (1-q) / (xq - x - q + e^{(q-1)x}),
///   P^+ = (1-x) P,   P^- = x P,
/// for n = 0..n_max. The common factor (1-q) is cancelled from numerator
/// and denominator before inversion, so everything stays in Q[q].
poly_sequence_triple expand_P(int n_max);

/// The denominator of P divided by (1-q):
///   1 - 2x - sum_{k>=2} (q-1)^{k-1} x^k / k!.
qpoly_series p_reduced_denominator(int order);

/// n!-scaled coefficients of 1 / (1 - r x - (q-1) x^2). Requires r >= 2.
std::vector<qpolynomial> expand_A(int r, int n_max);

struct g_expansion {
  std::vector<coefficient_outcome> total;
  std::vector<coefficient_outcome> plus;
  std::vector<coefficient_outcome> minus;
};

/// n!-scaled coefficients of
///   G_r   = (1-q) / ((1-x)(1-q) - (r-1) + e^{(q-1)x}),
///   G_r^+ = (1-x) G_r,   G_r^- = x G_r,
/// expanded over the rational functions in q with no cancellation. A
/// coefficient that is not a polynomial comes back as a
/// non_polynomial_coefficient.
g_expansion expand_G(int r, int n_max);

/// The series x - (1 - e^{(q-1)x}) / (q-1), computed exactly in Q[q].
qpoly_series p_inner_series(int order);

/// p_n recomputed as n! [x^n] sum_i (inner series)^i, n = 0..n_max.
std::vector<qpolynomial> p_power_sum(int n_max);

/// p_power_sum(n_max) equals expand_P(n_max).total.
bool power_sum_check(int n_max);

} // namespace coldes

#endif
