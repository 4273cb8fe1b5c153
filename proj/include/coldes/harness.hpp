#ifndef COLDES_HARNESS_HPP
#define COLDES_HARNESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coldes/brute_oracle.hpp"
#include "coldes/distribution.hpp"
#include "coldes/xseries.hpp"

namespace coldes {

enum class method { brute, formula, blocks, recurrence, series };

std::string method_name(method m);
/// Throws domain_error for an unknown name.
method parse_method(std::string_view name);

/// A method that has no route for the requested statistic.
class method_unavailable : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Computes one distribution by the requested method.
///
///   brute       exhaustive enumeration, any statistic
///   formula     pndes: n! C(n+1, n-2m); pdes/ndes: the triple sum;
///               des-cd: the single alternating sum; des-cc: the closed
///               triple sum (wrong for r != 2)
///   blocks      pndes/des-cd: sum over colored compositions
///   recurrence  pdes/ndes: p_n; pndes/des-cd: A_{r,n}; des-cc: g_{r,n}
///   series      pdes/ndes: P; pndes/des-cd: A_r; des-cc: G_r
///
/// Throws method_unavailable when the method has no route for the
/// statistic, and integrality_error when a route yields something that is
/// not a distribution (non-polynomial series coefficient, negative or
/// fractional count, counts not summing to r^n n!).
descent_distribution compute_distribution(group_params params,
                                          const descent_statistic &stat,
                                          method how,
                                          const brute_options &brute = {});

// ---------------------------------------------------------------------------
// Cross-verification matrix

enum class cell_status { agree, disagree, skipped };

struct verify_cell {
  std::string check;
  int r = 0;
  int n = 0;
  cell_status status = cell_status::skipped;
  std::string expected; // ground truth, filled on disagreement
  std::string actual;
};

struct verify_report {
  int r_max = 0;
  int n_max = 0;
  std::vector<verify_cell> cells;       // must agree
  std::vector<verify_cell> quarantined; // (c,c) closed formula and series, r != 2

  bool all_expected_agree() const;
};

/// Runs every applicable check for 1 <= r <= r_max, 0 <= n <= n_max.
/// Throws budget_exceeded before doing any work if the largest group is
/// above options.cap.
verify_report run_verify(int r_max, int n_max, const brute_options &options);

std::string format_text(const verify_report &report);
std::string format_json(const verify_report &report);

// ---------------------------------------------------------------------------
// r = 2 identity

struct identity_row {
  int n = 0;
  int m = 0;
  mpq_class lhs;
  mpz_class rhs;
  bool holds = false;
};

/// Every (n, m) with n <= n_max and m <= n/2, in order.
std::vector<identity_row> run_identity(int n_max);

// ---------------------------------------------------------------------------
// Report on the (c,c)-descent closed formula and G_r expansion

struct erratum_row {
  int n = 0;
  qpolynomial truth;                // g_{r,n} from the recurrence
  std::optional<qpolynomial> brute; // when within the enumeration cap
  std::vector<mpq_class> formula;   // closed-formula count for m = 0..n
  coefficient_outcome series;       // n! [x^n] G_r
  bool formula_agrees = false;
  bool series_agrees = false;
};

struct erratum_report {
  int r = 0;
  int n_max = 0;
  std::vector<erratum_row> rows;
};

erratum_report run_erratum(int r, int n_max, const brute_options &options);

std::string format_text(const erratum_report &report);

} // namespace coldes

#endif
