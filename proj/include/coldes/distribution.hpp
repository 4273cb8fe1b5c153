#ifndef COLDES_DISTRIBUTION_HPP
#define COLDES_DISTRIBUTION_HPP

#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "coldes/descent_stats.hpp"
#include "coldes/qpolynomial.hpp"

namespace coldes {

/// Histogram m -> number of elements of G_{r,n} with statistic value m, plus
/// where it came from. Only nonzero counts are stored.
struct descent_distribution {
  int r = 1;
  int n = 0;
  descent_statistic stat = descent_statistic::des_cc(0);
  std::string method;
  std::map<int, mpz_class> counts;

  mpz_class total() const;
  /// Sum of counts[m] q^m.
  qpolynomial to_polynomial() const;

  /// Same counts, metadata ignored.
  bool same_counts(const descent_distribution &other) const {
    return counts == other.counts;
  }
};

/// Builds a distribution from a distribution polynomial. Throws
/// integrality_error if a coefficient is not a nonnegative integer.
descent_distribution
distribution_from_polynomial(int r, int n, const descent_statistic &stat,
                             std::string method, const qpolynomial &p);

/// `{"0":"120","1":"240"}`: nonzero counts keyed by m, ascending.
std::string counts_json(const descent_distribution &d);

/// Full JSON document: r, n, stat, optional c and d, method, distribution.
std::string to_json(const descent_distribution &d);

/// `m,count` header then one row per nonzero count, m ascending.
std::string to_csv(const descent_distribution &d);

} // namespace coldes

#endif
