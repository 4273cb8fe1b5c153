#include "coldes/brute_oracle.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "coldes/errors.hpp"

namespace coldes {

namespace {

std::uint64_t checked_order(group_params params, std::uint64_t cap) {
  const auto order = params.order_u64();
  if (!order || *order > cap)
    throw budget_exceeded(order.value_or(UINT64_MAX), cap);
  return *order;
}

// Runs `visit(worker_state&, element)` over every element, with ranks split
// into `jobs` contiguous blocks, and returns the per-worker states in block
// order.
template <typename State, typename Visit>
std::vector<State> sweep(group_params params, const brute_options &options,
                         const State &initial, Visit visit) {
  const std::uint64_t order = checked_order(params, options.cap);
  const std::uint64_t jobs =
      std::clamp<std::uint64_t>(options.jobs, 1, std::max<std::uint64_t>(order, 1));
  std::vector<State> states(jobs, initial);

  auto work = [&](std::uint64_t worker) {
    const std::uint64_t begin = order * worker / jobs;
    const std::uint64_t end = order * (worker + 1) / jobs;
    group_cursor cursor(params, begin);
    for (std::uint64_t i = begin; i < end; ++i, cursor.advance())
      visit(states[worker], cursor.current());
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (std::uint64_t w = 0; w < jobs; ++w)
      threads.emplace_back(work, w);
  }
  return states;
}

using histogram = std::vector<std::uint64_t>;

void bump(histogram &h, int m) {
  const auto at = static_cast<std::size_t>(m);
  if (h.size() <= at)
    h.resize(at + 1, 0);
  ++h[at];
}

void merge_into(histogram &into, const histogram &from) {
  if (into.size() < from.size())
    into.resize(from.size(), 0);
  for (std::size_t m = 0; m < from.size(); ++m)
    into[m] += from[m];
}

std::map<int, mpz_class> to_counts(const histogram &h) {
  std::map<int, mpz_class> out;
  for (std::size_t m = 0; m < h.size(); ++m)
    if (h[m] != 0)
      out.emplace(static_cast<int>(m), mpz_class(static_cast<unsigned long>(h[m])));
  return out;
}

qpolynomial to_poly(const histogram &h) {
  qpolynomial out;
  for (std::size_t m = 0; m < h.size(); ++m)
    if (h[m] != 0)
      out += qpolynomial::monomial(static_cast<int>(m),
                                   mpq_class(static_cast<unsigned long>(h[m])));
  return out;
}

} // namespace

descent_distribution distribution(group_params params,
                                  const descent_statistic &stat,
                                  const brute_options &options) {
  stat.validate(params.r);
  const auto states = sweep(params, options, histogram{},
                            [&](histogram &h, const colored_permutation &x) {
                              bump(h, count(x, stat));
                            });
  histogram merged;
  for (const auto &h : states)
    merge_into(merged, h);
  return {params.r, params.n, stat, "brute", to_counts(merged)};
}

std::map<std::pair<int, int>, descent_distribution>
distribution_all_pairs(group_params params, const brute_options &options) {
  const int r = params.r;
  const auto pairs = static_cast<std::size_t>(r * r);
  const auto states = sweep(
      params, options, std::vector<histogram>(pairs),
      [&](std::vector<histogram> &hs, const colored_permutation &x) {
        std::vector<int> tally(pairs, 0);
        for (int i = 0; i + 1 < x.n(); ++i) {
          const auto a = x.letter(static_cast<std::size_t>(i));
          const auto b = x.letter(static_cast<std::size_t>(i) + 1);
          if (compare(a, b) > 0)
            ++tally[static_cast<std::size_t>(a.color * r + b.color)];
        }
        for (int c = 0; c < r; ++c)
          for (int d = c; d < r; ++d) {
            const auto slot = static_cast<std::size_t>(c * r + d);
            bump(hs[slot], tally[slot]);
          }
      });

  std::map<std::pair<int, int>, descent_distribution> out;
  for (int c = 0; c < r; ++c) {
    for (int d = c; d < r; ++d) {
      const auto slot = static_cast<std::size_t>(c * r + d);
      histogram merged;
      for (const auto &hs : states)
        merge_into(merged, hs[slot]);
      const auto stat = c == d ? descent_statistic::des_cc(c)
                               : descent_statistic::des_cd(c, d);
      out.emplace(std::pair{c, d},
                  descent_distribution{r, params.n, stat, "brute",
                                       to_counts(merged)});
    }
  }
  return out;
}

std::pair<qpolynomial, qpolynomial>
first_letter_split(group_params params, const descent_statistic &stat,
                   const brute_options &options) {
  stat.validate(params.r);
  using split = std::pair<histogram, histogram>;
  const auto states =
      sweep(params, options, split{}, [&](split &s, const colored_permutation &x) {
        const bool first_zero = x.n() == 0 || x.colors()[0] == 0;
        bump(first_zero ? s.first : s.second, count(x, stat));
      });
  split merged;
  for (const auto &s : states) {
    merge_into(merged.first, s.first);
    merge_into(merged.second, s.second);
  }
  return {to_poly(merged.first), to_poly(merged.second)};
}

} // namespace coldes
