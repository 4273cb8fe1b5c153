#include <doctest.h>

#include "coldes/bigint.hpp"
#include "coldes/closed_formulas.hpp"
#include "coldes/errors.hpp"
#include "coldes/recurrences.hpp"
#include "oracles.hpp"

using namespace coldes;

namespace {

mpq_class group_order(int r, int n) {
  return mpq_class(power(mpz_class(r), n) * factorial(n));
}

qpolynomial histogram_poly(const std::map<int, long long> &h) {
  qpolynomial out;
  for (const auto &[m, count] : h)
    out += qpolynomial::monomial(m, mpq_class(static_cast<long>(count)));
  return out;
}

} // namespace

TEST_CASE("p sequence") {
  const auto p = p_sequence(3);
  CHECK(p.total[0] == qpolynomial(1));
  CHECK(p.plus[0] == qpolynomial(1));
  CHECK(p.minus[0].is_zero());
  CHECK(p.total[1] == qpolynomial(2));
  CHECK(p.plus[1] == qpolynomial(1));
  CHECK(p.minus[1] == qpolynomial(1));
  CHECK(p.total[2] == qpolynomial{7, 1});
  CHECK(p.plus[2] == qpolynomial{3, 1});
  CHECK(p.minus[2] == qpolynomial(4));
  CHECK(p.total[3] == qpolynomial{37, 10, 1});
}

TEST_CASE("A and g sequences") {
  CHECK(a_sequence(2, 2)[2] == qpolynomial{6, 2});
  CHECK(a_sequence(3, 2)[2] == qpolynomial{16, 2});
  for (int r = 2; r <= 6; ++r)
    CHECK(a_sequence(r, 1)[1] == qpolynomial(r));
  CHECK_THROWS_AS(a_sequence(1, 3), domain_error);

  CHECK(g_sequence(3, 2).total[2] == qpolynomial{17, 1});
  CHECK(g_sequence(1, 3).total[3] == qpolynomial{1, 4, 1});
  const auto g = g_sequence(4, 1);
  CHECK(g.total[1] == qpolynomial(4));
  CHECK(g.plus[1] == qpolynomial(1));
  CHECK(g.minus[1] == qpolynomial(3));

  const auto p = p_sequence(15);
  const auto g2 = g_sequence(2, 15);
  CHECK(g2.total == p.total);
  CHECK(g2.plus == p.plus);
  CHECK(g2.minus == p.minus);
}

TEST_CASE("structural invariants, r <= 6, n <= 20") {
  const auto p = p_sequence(20);
  for (int n = 0; n <= 20; ++n) {
    CHECK(p.total[n] == p.plus[n] + p.minus[n]);
    CHECK(p.total[n].evaluate_at_one() == group_order(2, n));
    CHECK(p.total[n].has_integer_coefficients());
    if (n >= 1)
      CHECK(p.total[n].degree() <= n - 1);
  }
  for (int r = 1; r <= 6; ++r) {
    const auto g = g_sequence(r, 20);
    for (int n = 0; n <= 20; ++n) {
      CHECK(g.total[n] == g.plus[n] + g.minus[n]);
      CHECK(g.total[n].evaluate_at_one() == group_order(r, n));
      CHECK(g.total[n].has_integer_coefficients());
      if (n >= 1)
        CHECK(g.total[n].degree() <= n - 1);
    }
  }
  for (int r = 2; r <= 6; ++r) {
    const auto a = a_sequence(r, 20);
    for (int n = 0; n <= 20; ++n) {
      CHECK(a[n].evaluate_at_one() == group_order(r, n));
      CHECK(a[n].has_integer_coefficients());
      CHECK(a[n].degree() <= n / 2);
    }
  }
}

TEST_CASE("A_2 matches the pn-descent closed form, n <= 20") {
  const auto a = a_sequence(2, 20);
  for (int n = 0; n <= 20; ++n)
    for (int m = 0; m <= n; ++m)
      CHECK(a[n].coefficient(m) == mpq_class(pndes_count(n, m)));
}

TEST_CASE("g_1 gives the Eulerian polynomials, n <= 7") {
  const auto g = g_sequence(1, 7);
  for (int n = 1; n <= 7; ++n)
    CHECK(g.total[n] == histogram_poly(oracle::eulerian(n)));
}

TEST_CASE("sequences match enumeration, r <= 4, n <= 6") {
  for (int r = 1; r <= 4; ++r) {
    const int n_max = r == 4 ? 5 : 6;
    const auto g = g_sequence(r, n_max);
    for (int n = 0; n <= n_max; ++n) {
      CHECK(g.total[n] == histogram_poly(oracle::pair_histogram(r, n, 0, 0)));
      if (r >= 2) {
        const auto a = a_sequence(r, n_max);
        CHECK(a[n] == histogram_poly(oracle::pair_histogram(r, n, 0, 1)));
      }
    }
  }
}

TEST_CASE("plus and minus parts match enumeration split by first color") {
  for (int r = 1; r <= 4; ++r) {
    const int n_max = r == 4 ? 5 : 6;
    const auto g = g_sequence(r, n_max);
    for (int n = 1; n <= n_max; ++n) {
      std::map<int, long long> first_zero;
      std::map<int, long long> first_other;
      oracle::for_each_word(r, n, [&](const oracle::word &w) {
        const int m = oracle::pair_descents(r, w, 0, 0);
        ++(w.colors[0] == 0 ? first_zero : first_other)[m];
      });
      CHECK(g.plus[n] == histogram_poly(first_zero));
      CHECK(g.minus[n] == histogram_poly(first_other));
    }
  }
}
