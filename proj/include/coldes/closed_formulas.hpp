#ifndef COLDES_CLOSED_FORMULAS_HPP
#define COLDES_CLOSED_FORMULAS_HPP

#include <gmpxx.h>

#include "coldes/qpolynomial.hpp"

namespace coldes {

// Closed-form counts of elements with exactly m descents of a given kind.
// Every sum is evaluated exactly as written, with binomial(a, b) = 0 outside
// 0 <= b <= a and 0^0 = 1.

/// Signed permutations of n letters with m pn-descents: n! C(n+1, n-2m).
mpz_class pndes_count(int n, int m);

/// Signed permutations of n letters with m positive descents; the outer index
/// i runs over [0, n].
mpz_class pdes_count(int n, int m);

/// Elements of G_{r,n} with m (c,d)-descents, c < d:
///   n! sum_{j=0}^{n-2m} C(m+j, j) C(j, n-2m-j) r^{2j+2m-n} (-1)^{n-j}.
/// Requires r >= 2.
mpz_class cd_count(int r, int n, int m);

/// The same count through the block-counting route:
///   m = 0: n! sum_{i=0}^{n} (r-1)^i
///          + n! sum_{k=1}^{n-1} sum_{b=1}^{k} C(k,b) C(n-k,b) (r-2)^b (r-1)^{n-k-b}
///   m > 0: n! sum_{k=1}^{n-1} sum_{b=1}^{k} C(k,b) C(n-k,b) C(b,m)
///             (r-2)^{b-m} (r-1)^{n-k-b}
/// Requires r >= 2.
mpz_class cd_count_blocks(int r, int n, int m);

/// n! times the sum over all colored compositions mu of n of
/// (q+r-2)^{t_mu} (r-1)^{n-k_mu-t_mu}. Requires r >= 2; n = 0 gives 1.
qpolynomial composition_sum_poly(int r, int n);

/// The closed-formula count of elements with m (c,c)-descents:
///   n! sum_{j=0}^{n-m} sum_{i=0}^{j} sum_{k=0}^{i} C(j,i) C(i,k) C(n-j,m)
///      (-1)^{n+m+j} (1-r)^{i-k} k^{n-j+i} / (n-j+i)!
/// Returned as a rational: it disagrees with the true counts for r > 2 and
/// is not guaranteed to be an integer there.
mpq_class cc_count(int r, int n, int m);

/// Left-hand side of the r = 2 identity:
///   sum_{j=0}^{n-2m} C(m+j, j) C(j, n-2m-j) 2^{2j+2m-n} (-1)^{n-j}.
mpq_class identity_r2_lhs(int n, int m);

/// identity_r2_lhs(n, m) == C(n+1, n-2m).
bool identity_r2(int n, int m);

} // namespace coldes

#endif
