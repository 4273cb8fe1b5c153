#ifndef COLDES_DESCENT_STATS_HPP
#define COLDES_DESCENT_STATS_HPP

#include <string>
#include <utility>
#include <vector>

#include "coldes/colored_permutation.hpp"

namespace coldes {

/// One of the colored descent statistics.
///
/// pdes, ndes and pndes are the signed-permutation names (r = 2) for
/// des_{0,0}, des_{1,1} and des_{0,1}.
class descent_statistic {
public:
  enum class kind { pdes, ndes, pndes, des_cd, des_cc };

  static descent_statistic pdes() { return descent_statistic(kind::pdes, 0, 0); }
  static descent_statistic ndes() { return descent_statistic(kind::ndes, 1, 1); }
  static descent_statistic pndes() {
    return descent_statistic(kind::pndes, 0, 1);
  }
  /// Throws domain_error unless 0 <= c < d.
  static descent_statistic des_cd(int c, int d);
  /// Throws domain_error unless c >= 0.
  static descent_statistic des_cc(int c);

  kind which() const noexcept { return kind_; }
  /// Color of the left letter of a counted descent.
  int left_color() const noexcept { return c_; }
  /// Color of the right letter of a counted descent.
  int right_color() const noexcept { return d_; }

  /// "pdes", "ndes", "pndes", "des-cd" or "des-cc".
  std::string name() const;

  /// Throws domain_error if the statistic is not defined on G_{r,*}.
  void validate(int r) const;

  friend bool operator==(const descent_statistic &,
                         const descent_statistic &) = default;

private:
  descent_statistic(kind k, int c, int d) : kind_(k), c_(c), d_(d) {}

  kind kind_;
  int c_;
  int d_;
};

/// Descent positions (1-based): i such that letter i > letter i+1 in the
/// colored order.
std::vector<int> descent_set(const colored_permutation &x);

int count(const colored_permutation &x, const descent_statistic &stat);

/// Number of descents whose left letter has color `left` and right letter has
/// color `right`, for any ordered pair of colors.
int count_color_pair(const colored_permutation &x, int left, int right);

enum class block_tag { c, not_c };

/// A composition of n with the kind of its first block.
struct colored_composition {
  std::vector<int> parts;
  block_tag first_tag = block_tag::c;

  friend bool operator==(const colored_composition &,
                         const colored_composition &) = default;
};

struct block_params {
  int e = 0;     // sum of the parts in even places (1-based)
  int k = 0;     // number of letters colored c
  int b = 0;     // number of c-blocks
  int b_bar = 0; // number of non-c blocks
  int t = 0;     // transitions from a c-block to a non-c block

  friend bool operator==(const block_params &, const block_params &) = default;
};

/// Maximal runs of positions colored c / not colored c. Throws domain_error
/// for the empty word.
colored_composition blocks(const colored_permutation &x, int c);

/// Throws domain_error if the parts are not positive or do not sum to n.
block_params compute_block_params(const colored_composition &mu, int n);

/// Every colored composition of n (2^n of them for n >= 1), parts in
/// lexicographic order, tag c before tag not_c.
std::vector<colored_composition> colored_compositions(int n);

/// pndes computed from the sign blocks; r = 2 only.
int pndes_from_blocks(const colored_permutation &x);

} // namespace coldes

#endif
