#include "coldes/descent_stats.hpp"

#include <numeric>

#include "coldes/errors.hpp"

namespace coldes {

descent_statistic descent_statistic::des_cd(int c, int d) {
  if (c < 0 || d <= c)
    throw domain_error("des_cd requires 0 <= c < d (got c=" +
                       std::to_string(c) + ", d=" + std::to_string(d) + ")");
  return descent_statistic(kind::des_cd, c, d);
}

descent_statistic descent_statistic::des_cc(int c) {
  if (c < 0)
    throw domain_error("des_cc requires c >= 0");
  return descent_statistic(kind::des_cc, c, c);
}

std::string descent_statistic::name() const {
  switch (kind_) {
  case kind::pdes:
    return "pdes";
  case kind::ndes:
    return "ndes";
  case kind::pndes:
    return "pndes";
  case kind::des_cd:
    return "des-cd";
  case kind::des_cc:
    return "des-cc";
  }
  return "unknown";
}

void descent_statistic::validate(int r) const {
  switch (kind_) {
  case kind::pdes:
  case kind::ndes:
  case kind::pndes:
    if (r != 2)
      throw domain_error(name() + " is defined only for r = 2");
    return;
  case kind::des_cd:
    if (r < 2 || d_ > r - 1)
      throw domain_error("des-cd(" + std::to_string(c_) + "," +
                         std::to_string(d_) + ") needs colors in [0, " +
                         std::to_string(r - 1) + "]");
    return;
  case kind::des_cc:
    if (c_ > r - 1)
      throw domain_error("des-cc(" + std::to_string(c_) +
                         ") needs a color in [0, " + std::to_string(r - 1) +
                         "]");
    return;
  }
}

std::vector<int> descent_set(const colored_permutation &x) {
  std::vector<int> out;
  for (int i = 0; i + 1 < x.n(); ++i) {
    const auto pos = static_cast<std::size_t>(i);
    if (compare(x.letter(pos), x.letter(pos + 1)) > 0)
      out.push_back(i + 1);
  }
  return out;
}

int count_color_pair(const colored_permutation &x, int left, int right) {
  int total = 0;
  for (int i = 0; i + 1 < x.n(); ++i) {
    const auto pos = static_cast<std::size_t>(i);
    const auto a = x.letter(pos);
    const auto b = x.letter(pos + 1);
    if (a.color == left && b.color == right && compare(a, b) > 0)
      ++total;
  }
  return total;
}

int count(const colored_permutation &x, const descent_statistic &stat) {
  stat.validate(x.r());
  return count_color_pair(x, stat.left_color(), stat.right_color());
}

colored_composition blocks(const colored_permutation &x, int c) {
  if (x.n() == 0)
    throw domain_error("the empty word has no block composition");
  const auto colors = x.colors();
  colored_composition out;
  out.first_tag = colors[0] == c ? block_tag::c : block_tag::not_c;
  bool inside_c = colors[0] == c;
  int run = 0;
  for (int color : colors) {
    if ((color == c) != inside_c) {
      out.parts.push_back(run);
      run = 0;
      inside_c = !inside_c;
    }
    ++run;
  }
  out.parts.push_back(run);
  return out;
}

block_params compute_block_params(const colored_composition &mu, int n) {
  if (mu.parts.empty())
    throw domain_error("a composition needs at least one part");
  int sum = 0;
  int even_sum = 0;
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    if (mu.parts[i] < 1)
      throw domain_error("composition parts must be positive");
    sum += mu.parts[i];
    if (i % 2 == 1)
      even_sum += mu.parts[i];
  }
  if (sum != n)
    throw domain_error("composition parts sum to " + std::to_string(sum) +
                       ", expected " + std::to_string(n));

  const int length = static_cast<int>(mu.parts.size());
  const bool starts_c = mu.first_tag == block_tag::c;
  block_params out;
  out.e = even_sum;
  out.k = starts_c ? n - even_sum : even_sum;
  if (length % 2 == 0)
    out.b = length / 2;
  else
    out.b = starts_c ? (length + 1) / 2 : (length - 1) / 2;
  out.b_bar = length - out.b;
  out.t = starts_c ? length / 2 : (length - 1) / 2;
  return out;
}

std::vector<colored_composition> colored_compositions(int n) {
  std::vector<colored_composition> out;
  if (n < 1)
    return out;
  // The top bit of the mask is the cut after letter 1. Counting the mask
  // down yields the parts in lexicographic order.
  const unsigned cuts = static_cast<unsigned>(n - 1);
  for (unsigned long mask = (1UL << cuts); mask-- > 0;) {
    std::vector<int> parts;
    int run = 1;
    for (unsigned i = 0; i < cuts; ++i) {
      if (mask & (1UL << (cuts - 1 - i))) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back({parts, block_tag::c});
    out.push_back({std::move(parts), block_tag::not_c});
  }
  return out;
}

int pndes_from_blocks(const colored_permutation &x) {
  if (x.r() != 2)
    throw domain_error("pndes_from_blocks is defined only for r = 2");
  if (x.n() == 0)
    return 0;
  const auto mu = blocks(x, 0);
  const int b = static_cast<int>(mu.parts.size());
  if (b % 2 == 1)
    return (b - 1) / 2;
  return mu.first_tag == block_tag::c ? b / 2 : b / 2 - 1;
}

} // namespace coldes
