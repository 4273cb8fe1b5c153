#ifndef COLDES_RECURRENCES_HPP
#define COLDES_RECURRENCES_HPP

#include <vector>

#include "coldes/qpolynomial.hpp"

namespace coldes {

/// Distribution polynomials split by the first letter: `plus` collects the
/// elements whose first letter has color 0, `minus` the rest.
struct poly_sequence_triple {
  std::vector<qpolynomial> total;
  std::vector<qpolynomial> plus;
  std::vector<qpolynomial> minus;
};

/// p_n(q), p_n^+(q), p_n^-(q) for positive descents on B_n, n = 0..n_max.
///
/// Seeds p_0 = p_0^+ = 1, p_0^- = 0 and p_1 = 2, p_1^+ = p_1^- = 1. The
/// total recurrence runs from n = 1 and the first-letter recurrence from
/// n = 2; at n = 1 the latter would give p_1^+ = 2.
poly_sequence_triple p_sequence(int n_max);

/// A_{r,n}(q) for (c,d)-descents, c < d: A_0 = 1 and
///   A_n = r n A_{n-1} + (q-1) n (n-1) A_{n-2}.
/// Requires r >= 2.
std::vector<qpolynomial> a_sequence(int r, int n_max);

/// g_{r,n}(q), g^+, g^- for (0,0)-descents. Seeds g_0 = g_0^+ = 1, g_0^- = 0,
/// g_1 = r, g_1^+ = 1, g_1^- = r-1; the first-letter recurrence starts at
/// n = 2 as for p. Requires r >= 1.
poly_sequence_triple g_sequence(int r, int n_max);

} // namespace coldes

#endif
