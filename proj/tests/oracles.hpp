// Test-only oracles. Nothing here calls into the library's enumeration,
// ordering or descent code, so agreement with it is meaningful.
#ifndef COLDES_TESTS_ORACLES_HPP
#define COLDES_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

struct word {
  std::vector<int> values; // 1..n
  std::vector<int> colors; // 0..r-1
};

/// Visits every colored word of G_{r,n}: all permutations times all color
/// words, by plain nested iteration.
inline void for_each_word(int r, int n, const std::function<void(const word &)> &f) {
  word w;
  w.values.resize(static_cast<std::size_t>(n));
  std::iota(w.values.begin(), w.values.end(), 1);
  do {
    std::uint64_t color_words = 1;
    for (int i = 0; i < n; ++i)
      color_words *= static_cast<std::uint64_t>(r);
    for (std::uint64_t code = 0; code < color_words; ++code) {
      w.colors.assign(static_cast<std::size_t>(n), 0);
      std::uint64_t rest = code;
      for (int i = 0; i < n; ++i) {
        w.colors[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(r));
        rest /= static_cast<std::uint64_t>(r);
      }
      f(w);
    }
  } while (std::next_permutation(w.values.begin(), w.values.end()));
}

/// Position of a letter on the line of Sigma_{r,n}: color r-1 letters come
/// first, then color r-2, ..., color 0 last; within a color by value.
inline int line_position(int r, int n, int value, int color) {
  return (r - 1 - color) * n + value;
}

/// Number of i with colors (c_i, c_{i+1}) = (left, right) and letter i
/// further along the line than letter i+1.
inline int pair_descents(int r, const word &w, int left, int right) {
  const int n = static_cast<int>(w.values.size());
  int out = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const auto a = static_cast<std::size_t>(i);
    if (w.colors[a] != left || w.colors[a + 1] != right)
      continue;
    if (line_position(r, n, w.values[a], w.colors[a]) >
        line_position(r, n, w.values[a + 1], w.colors[a + 1]))
      ++out;
  }
  return out;
}

/// Histogram m -> count of (left,right)-descents over G_{r,n}.
inline std::map<int, long long> pair_histogram(int r, int n, int left, int right) {
  std::map<int, long long> h;
  for_each_word(r, n, [&](const word &w) { ++h[pair_descents(r, w, left, right)]; });
  return h;
}

/// Signed-integer view for r = 2: color 0 is +v, color 1 is -v.
inline std::vector<int> as_signed(const word &w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.values.size(); ++i)
    out.push_back(w.colors[i] == 0 ? w.values[i] : -w.values[i]);
  return out;
}

/// Positive descents pi_i > pi_{i+1} > 0 on the signed view.
inline int signed_pdes(const word &w) {
  const auto s = as_signed(w);
  int out = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] > s[i + 1] && s[i + 1] > 0)
      ++out;
  return out;
}

/// Negative descents 0 > pi_i > pi_{i+1}, where in the alphabet order
/// bar(1) < ... < bar(n), so -a "exceeds" -b exactly when a > b.
inline int signed_ndes(const word &w) {
  const auto s = as_signed(w);
  int out = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] < 0 && s[i + 1] < 0 && -s[i] > -s[i + 1])
      ++out;
  return out;
}

/// pn-descents pi_i > 0 > pi_{i+1}.
inline int signed_pndes(const word &w) {
  const auto s = as_signed(w);
  int out = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] > 0 && s[i + 1] < 0)
      ++out;
  return out;
}

/// Eulerian numbers A(n, m): permutations of n letters with m descents.
inline std::map<int, long long> eulerian(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::map<int, long long> h;
  do {
    int d = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      d += p[i] > p[i + 1] ? 1 : 0;
    ++h[d];
  } while (std::next_permutation(p.begin(), p.end()));
  return h;
}

/// The rn x rn 0/1 matrix of the bijection of Sigma_{r,n} given by a window:
/// i^{[a]} -> values[i]^{[a + colors[i] mod r]}. Row = image, column = source;
/// letter (v, c) sits at index (v-1)*r + c.
using matrix = std::vector<std::vector<int>>;

inline matrix permutation_matrix(int r, const word &w) {
  const int n = static_cast<int>(w.values.size());
  const auto size = static_cast<std::size_t>(r * n);
  matrix m(size, std::vector<int>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a) {
      const int source = i * r + a;
      const int image = (w.values[static_cast<std::size_t>(i)] - 1) * r +
                        (a + w.colors[static_cast<std::size_t>(i)]) % r;
      m[static_cast<std::size_t>(image)][static_cast<std::size_t>(source)] = 1;
    }
  return m;
}

inline matrix multiply(const matrix &a, const matrix &b) {
  const auto size = a.size();
  matrix out(size, std::vector<int>(size, 0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t k = 0; k < size; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < size; ++j)
          out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// Exact binomial for small arguments by Pascal's triangle.
inline long long pascal(int a, int b) {
  if (a < 0 || b < 0 || b > a)
    return 0;
  std::vector<long long> row(static_cast<std::size_t>(a) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = i; j > 0; --j)
      row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(b)];
}

} // namespace oracle

#endif
