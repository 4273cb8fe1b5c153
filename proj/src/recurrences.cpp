#include "coldes/recurrences.hpp"

#include "coldes/bigint.hpp"
#include "coldes/errors.hpp"

namespace coldes {

namespace {

// Shared shape of the positive-descent and (0,0)-descent recurrences. The
// largest letter n either sits last (weight `colors` for its color), sits at
// position j < n with a nonzero color (weight `colors - 1`, no descent at
// j), or sits at j with color 0 (a descent unless the next letter has a
// nonzero color).
poly_sequence_triple largest_letter_recurrence(int colors, int n_max) {
  if (n_max < 0)
    throw domain_error("n_max must be nonnegative");
  const auto size = static_cast<std::size_t>(n_max) + 1;
  poly_sequence_triple seq;
  seq.total.resize(size);
  seq.plus.resize(size);
  seq.minus.resize(size);

  seq.total[0] = 1;
  seq.plus[0] = 1;
  seq.minus[0] = 0;
  if (n_max >= 1) {
    seq.total[1] = colors;
    seq.plus[1] = 1;
    seq.minus[1] = colors - 1;
  }

  const qpolynomial q = qpolynomial::q();
  const mpq_class nonzero_colors = colors - 1;
  for (int n = 2; n <= n_max; ++n) {
    const auto at = [](int i) { return static_cast<std::size_t>(i); };
    // Weight of the suffix after the largest letter when it carries color 0.
    const auto suffix = [&](int len) {
      return seq.minus[at(len)] + q * seq.plus[at(len)];
    };

    qpolynomial total = seq.total[at(n - 1)] * mpq_class(colors);
    qpolynomial plus = seq.plus[at(n - 1)] * mpq_class(colors);
    for (int j = 1; j <= n - 1; ++j) {
      const mpq_class ways(binomial(n - 1, j - 1));
      const qpolynomial tail = seq.total[at(n - j)];
      total += (seq.total[at(j - 1)] * tail) * (ways * nonzero_colors);
      total += (seq.total[at(j - 1)] * suffix(n - j)) * ways;
      if (j >= 2)
        plus += (seq.plus[at(j - 1)] * tail) * (ways * nonzero_colors);
      plus += (seq.plus[at(j - 1)] * suffix(n - j)) * ways;
    }
    seq.minus[at(n)] = total - plus;
    seq.total[at(n)] = std::move(total);
    seq.plus[at(n)] = std::move(plus);
  }
  return seq;
}

} // namespace

poly_sequence_triple p_sequence(int n_max) {
  return largest_letter_recurrence(2, n_max);
}

poly_sequence_triple g_sequence(int r, int n_max) {
  if (r < 1)
    throw domain_error("g_sequence requires r >= 1");
  return largest_letter_recurrence(r, n_max);
}

std::vector<qpolynomial> a_sequence(int r, int n_max) {
  if (r < 2)
    throw domain_error("a_sequence requires r >= 2");
  if (n_max < 0)
    throw domain_error("n_max must be nonnegative");
  std::vector<qpolynomial> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  out.emplace_back(1);
  const qpolynomial q_minus_one{-1, 1};
  for (int n = 1; n <= n_max; ++n) {
    qpolynomial next = out.back() * mpq_class(r * n);
    if (n >= 2)
      next += out[static_cast<std::size_t>(n - 2)] * q_minus_one *
              mpq_class(n * (n - 1));
    out.push_back(std::move(next));
  }
  return out;
}

} // namespace coldes
