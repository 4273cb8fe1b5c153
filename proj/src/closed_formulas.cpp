#include "coldes/closed_formulas.hpp"

#include <map>
#include <utility>

#include "coldes/bigint.hpp"
#include "coldes/descent_stats.hpp"
#include "coldes/errors.hpp"

namespace coldes {

namespace {

void require_colors(int r, const char *what) {
  if (r < 2)
    throw domain_error(std::string(what) + " requires r >= 2");
}

void require_nonnegative(int n, int m) {
  if (n < 0 || m < 0)
    throw domain_error("n and m must be nonnegative");
}

mpz_class as_integer(const mpq_class &value, const char *what) {
  if (value.get_den() != 1)
    throw integrality_error(std::string(what) + " evaluated to " +
                            value.get_str() + ", not an integer");
  return value.get_num();
}

// sum_{j} C(m+j, j) C(j, n-2m-j) r^{2j+2m-n} (-1)^{n-j}
mpq_class cd_inner_sum(int r, int n, int m) {
  mpq_class sum = 0;
  for (int j = 0; j <= n - 2 * m; ++j) {
    const mpz_class weight = binomial(m + j, j) * binomial(j, n - 2 * m - j);
    if (weight == 0)
      continue;
    sum += mpq_class(weight) * power(mpq_class(r), 2 * j + 2 * m - n) *
           sign_power(n - j);
  }
  return sum;
}

} // namespace

mpz_class pndes_count(int n, int m) {
  require_nonnegative(n, m);
  return factorial(n) * binomial(n + 1, n - 2 * m);
}

mpz_class pdes_count(int n, int m) {
  require_nonnegative(n, m);
  mpz_class sum = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const mpz_class outer = factorial(i - j) * binomial(n, i - j) *
                              binomial(i, j) * binomial(n - i, m);
      if (outer == 0)
        continue;
      for (int k = 0; k <= j; ++k) {
        const mpz_class term =
            outer * binomial(j, k) * power(mpz_class(k), n + j - i);
        sum += sign_power(i + j + k + n + m) * term;
      }
    }
  }
  return sum;
}

mpz_class cd_count(int r, int n, int m) {
  require_colors(r, "cd_count");
  require_nonnegative(n, m);
  return as_integer(mpq_class(factorial(n)) * cd_inner_sum(r, n, m),
                    "cd_count");
}

mpz_class cd_count_blocks(int r, int n, int m) {
  require_colors(r, "cd_count_blocks");
  require_nonnegative(n, m);
  const mpz_class others = r - 1;
  const mpz_class spare = r - 2;
  mpz_class sum = 0;
  if (m == 0)
    for (int i = 0; i <= n; ++i)
      sum += power(others, i);
  for (int k = 1; k <= n - 1; ++k) {
    for (int b = 1; b <= k; ++b) {
      mpz_class weight = binomial(k, b) * binomial(n - k, b);
      if (m > 0)
        weight *= binomial(b, m);
      if (weight == 0)
        continue;
      sum += weight * power(spare, b - m) * power(others, n - k - b);
    }
  }
  return factorial(n) * sum;
}

qpolynomial composition_sum_poly(int r, int n) {
  require_colors(r, "composition_sum_poly");
  if (n < 0)
    throw domain_error("n must be nonnegative");
  if (n == 0)
    return 1;
  // The weight of mu depends only on (t, n - k - t); tally those first.
  std::map<std::pair<int, int>, unsigned long> tally;
  for (const auto &mu : colored_compositions(n)) {
    const block_params params = compute_block_params(mu, n);
    ++tally[{params.t, n - params.k - params.t}];
  }
  const qpolynomial transition = qpolynomial{r - 2L, 1};
  qpolynomial sum;
  for (const auto &[exponents, times] : tally)
    sum += power(transition, static_cast<unsigned>(exponents.first)) *
           mpq_class(power(mpz_class(r - 1), exponents.second) * times);
  return sum * mpq_class(factorial(n));
}

mpq_class cc_count(int r, int n, int m) {
  if (r < 1)
    throw domain_error("cc_count requires r >= 1");
  require_nonnegative(n, m);
  const mpz_class one_minus_r = 1 - r;
  mpq_class sum = 0;
  for (int j = 0; j <= n - m; ++j) {
    for (int i = 0; i <= j; ++i) {
      for (int k = 0; k <= i; ++k) {
        const mpz_class numerator = binomial(j, i) * binomial(i, k) *
                                    binomial(n - j, m) *
                                    power(one_minus_r, i - k) *
                                    power(mpz_class(k), n - j + i);
        if (numerator == 0)
          continue;
        sum += mpq_class(sign_power(n + m + j) * numerator,
                         factorial(n - j + i));
      }
    }
  }
  sum.canonicalize();
  return mpq_class(factorial(n)) * sum;
}

mpq_class identity_r2_lhs(int n, int m) {
  require_nonnegative(n, m);
  return cd_inner_sum(2, n, m);
}

bool identity_r2(int n, int m) {
  return identity_r2_lhs(n, m) == mpq_class(binomial(n + 1, n - 2 * m));
}

} // namespace coldes
