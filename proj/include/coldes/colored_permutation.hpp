#ifndef COLDES_COLORED_PERMUTATION_HPP
#define COLDES_COLORED_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace coldes {

/// Parameters of the colored permutation group G_{r,n} = Z_r wr S_n.
struct group_params {
  int r = 1;
  int n = 0;

  group_params() = default;
  group_params(int colors, int letters);

  /// r^n * n!
  mpz_class order() const;
  /// order() when it fits in 64 bits.
  std::optional<std::uint64_t> order_u64() const;

  friend bool operator==(const group_params &, const group_params &) = default;
};

/// A letter i^{[j]} of the alphabet Sigma_{r,n}.
struct colored_letter {
  int value = 1;
  int color = 0;

  friend bool operator==(const colored_letter &,
                         const colored_letter &) = default;
};

/// Colored order: a higher color is smaller; equal colors compare by value.
///   1^{[r-1]} < ... < n^{[r-1]} < ... < 1^{[0]} < ... < n^{[0]}
std::strong_ordering compare(const colored_letter &a, const colored_letter &b);

inline std::strong_ordering operator<=>(const colored_letter &a,
                                        const colored_letter &b) {
  return compare(a, b);
}

/// The pair (z, tau). tau[i-1] = tau(i); z is indexed by value, so z[v-1]
/// is the color carried by the letter whose absolute value is v.
struct ztau_form {
  std::vector<int> z;
  std::vector<int> tau;

  friend bool operator==(const ztau_form &, const ztau_form &) = default;
};

/// An element of G_{r,n} stored in window notation pi_1^{[c_1]}...pi_n^{[c_n]}.
///
/// Viewed as a permutation of Sigma_{r,n}, the element sends i^{[a]} to
/// pi_i^{[a + c_i mod r]}. Products compose right to left: (a*b)(x) = a(b(x)).
class colored_permutation {
public:
  /// The identity of G_{1,0} (the empty word).
  colored_permutation() = default;

  /// Throws parameter_error unless values is a permutation of {1..n} and
  /// every color lies in [0, r-1].
  colored_permutation(group_params params, std::vector<int> values,
                      std::vector<int> colors);

  static colored_permutation identity(group_params params);

  const group_params &params() const noexcept { return params_; }
  int r() const noexcept { return params_.r; }
  int n() const noexcept { return params_.n; }

  std::span<const int> values() const noexcept { return values_; }
  std::span<const int> colors() const noexcept { return colors_; }

  /// Letter at 0-based word index.
  colored_letter letter(std::size_t index) const {
    return {values_[index], colors_[index]};
  }

  ztau_form to_ztau() const;
  static colored_permutation from_ztau(group_params params,
                                       const ztau_form &form);

  friend bool operator==(const colored_permutation &,
                         const colored_permutation &) = default;

private:
  struct unchecked_tag {};
  colored_permutation(unchecked_tag, group_params params,
                      std::vector<int> values, std::vector<int> colors)
      : params_(params), values_(std::move(values)),
        colors_(std::move(colors)) {}

  friend class group_cursor;
  friend colored_permutation multiply(const colored_permutation &,
                                      const colored_permutation &);
  friend colored_permutation inverse(const colored_permutation &);
  friend colored_permutation drop_prefix(const colored_permutation &,
                                         int count);

  group_params params_;
  std::vector<int> values_;
  std::vector<int> colors_;
};

/// Group product through the (z, tau) rule
///   (z, tau) * (z', tau') = ((z_w + z'_{tau^{-1}(w)})_w, tau o tau').
/// Throws parameter_error if the operands come from different groups.
colored_permutation multiply(const colored_permutation &a,
                             const colored_permutation &b);

colored_permutation inverse(const colored_permutation &x);

/// pi -> (-pi_1)...(-pi_n); requires r = 2.
colored_permutation negate(const colored_permutation &x);

/// Adds one to every color modulo r.
colored_permutation rotate_colors(const colored_permutation &x);

/// Removes the first `count` letters and relabels the remaining values onto
/// {1, ..., n - count} preserving their relative order. Colors travel with
/// their letters.
colored_permutation drop_prefix(const colored_permutation &x, int count);

/// pi -> pi'. Requires n >= 1.
colored_permutation drop_first(const colored_permutation &x);

/// pi -> pi''. Requires n >= 2.
colored_permutation drop_first_two(const colored_permutation &x);

// Ranking. index = lehmer_rank(values) * r^n + (c_1 c_2 ... c_n read in base
// r, c_1 most significant). Index 0 is the identity with every color 0, and
// enumeration order agrees with index order.

mpz_class rank(const colored_permutation &x);
colored_permutation unrank(group_params params, const mpz_class &index);

/// Walks G_{r,n} in rank order starting from an arbitrary index.
class group_cursor {
public:
  group_cursor(group_params params, std::uint64_t start);
  explicit group_cursor(group_params params);

  const colored_permutation &current() const noexcept { return current_; }
  bool done() const noexcept { return done_; }
  void advance();

private:
  colored_permutation current_;
  bool done_ = false;
};

/// Single-pass range over every element of G_{r,n}.
class group_elements {
public:
  explicit group_elements(group_params params) : params_(params) {}

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = colored_permutation;
    using difference_type = std::ptrdiff_t;
    using reference = const colored_permutation &;
    using pointer = const colored_permutation *;

    iterator() = default;
    explicit iterator(group_params params) : cursor_(group_cursor(params)) {}

    reference operator*() const { return cursor_->current(); }
    pointer operator->() const { return &cursor_->current(); }
    iterator &operator++() {
      cursor_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator &it, std::default_sentinel_t) {
      return !it.cursor_ || it.cursor_->done();
    }

  private:
    std::optional<group_cursor> cursor_;
  };

  iterator begin() const { return iterator(params_); }
  std::default_sentinel_t end() const { return {}; }

private:
  group_params params_;
};

inline group_elements enumerate(group_params params) {
  return group_elements(params);
}

/// Parses space-separated tokens `v[c]`. A bare `v` has color 0; for r = 2
/// `-v` denotes v with color 1. n is the number of tokens.
colored_permutation parse_colored_permutation(std::string_view text, int r);

/// Inverse of parse: tokens `v[c]` separated by single spaces.
std::string to_string(const colored_permutation &x);

} // namespace coldes

#endif
