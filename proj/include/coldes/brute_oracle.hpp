#ifndef COLDES_BRUTE_ORACLE_HPP
#define COLDES_BRUTE_ORACLE_HPP

#include <cstdint>
#include <map>
#include <utility>

#include "coldes/colored_permutation.hpp"
#include "coldes/descent_stats.hpp"
#include "coldes/distribution.hpp"
#include "coldes/qpolynomial.hpp"

namespace coldes {

struct brute_options {
  /// Worker threads; each owns a contiguous block of ranks.
  unsigned jobs = 1;
  /// Refuse to enumerate groups larger than this.
  std::uint64_t cap = 100'000'000;
};

/// Exhaustive histogram of `stat` over G_{r,n}. Throws budget_exceeded when
/// the group is larger than options.cap and domain_error for an invalid
/// statistic.
descent_distribution distribution(group_params params,
                                  const descent_statistic &stat,
                                  const brute_options &options = {});

/// One sweep producing the (c,d)-descent histogram for every c <= d.
std::map<std::pair<int, int>, descent_distribution>
distribution_all_pairs(group_params params, const brute_options &options = {});

/// The distribution polynomial of `stat` restricted to elements whose first
/// letter has color 0 (`first`) and to the rest (`second`). The empty word
/// counts as color 0.
std::pair<qpolynomial, qpolynomial>
first_letter_split(group_params params, const descent_statistic &stat,
                   const brute_options &options = {});

} // namespace coldes

#endif
