#include "coldes/colored_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "coldes/errors.hpp"

namespace coldes {

namespace {

mpz_class factorial_mpz(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class power_mpz(int base, int exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return out;
}

void require_same_group(const colored_permutation &a,
                        const colored_permutation &b) {
  if (a.params() != b.params())
    throw parameter_error("operands belong to different groups G_{" +
                          std::to_string(a.r()) + "," + std::to_string(a.n()) +
                          "} and G_{" + std::to_string(b.r()) + "," +
                          std::to_string(b.n()) + "}");
}

} // namespace

group_params::group_params(int colors, int letters) : r(colors), n(letters) {
  if (r < 1)
    throw parameter_error("number of colors must be at least 1");
  if (n < 0)
    throw parameter_error("number of letters must be nonnegative");
}

mpz_class group_params::order() const {
  return power_mpz(r, n) * factorial_mpz(n);
}

std::optional<std::uint64_t> group_params::order_u64() const {
  const mpz_class value = order();
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > 64)
    return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

std::strong_ordering compare(const colored_letter &a, const colored_letter &b) {
  if (a.color != b.color)
    return b.color <=> a.color;
  return a.value <=> b.value;
}

colored_permutation::colored_permutation(group_params params,
                                         std::vector<int> values,
                                         std::vector<int> colors)
    : params_(params), values_(std::move(values)), colors_(std::move(colors)) {
  const auto n = static_cast<std::size_t>(params_.n);
  if (values_.size() != n || colors_.size() != n)
    throw parameter_error("window length does not match n = " +
                          std::to_string(params_.n));
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > params_.n || seen[static_cast<std::size_t>(v)])
      throw parameter_error("values are not a permutation of {1..n}");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int c : colors_)
    if (c < 0 || c >= params_.r)
      throw parameter_error("color " + std::to_string(c) +
                            " outside [0, r-1]");
}

colored_permutation colored_permutation::identity(group_params params) {
  std::vector<int> values(static_cast<std::size_t>(params.n));
  std::iota(values.begin(), values.end(), 1);
  std::vector<int> colors(values.size(), 0);
  return {unchecked_tag{}, params, std::move(values), std::move(colors)};
}

ztau_form colored_permutation::to_ztau() const {
  ztau_form form;
  form.tau = values_;
  form.z.assign(values_.size(), 0);
  for (std::size_t i = 0; i < values_.size(); ++i)
    form.z[static_cast<std::size_t>(values_[i] - 1)] = colors_[i];
  return form;
}

colored_permutation colored_permutation::from_ztau(group_params params,
                                                   const ztau_form &form) {
  if (form.z.size() != form.tau.size())
    throw parameter_error("z and tau have different lengths");
  std::vector<int> colors(form.tau.size());
  for (std::size_t i = 0; i < form.tau.size(); ++i) {
    const int v = form.tau[i];
    if (v < 1 || v > static_cast<int>(form.z.size()))
      throw parameter_error("tau is not a permutation of {1..n}");
    colors[i] = form.z[static_cast<std::size_t>(v - 1)];
  }
  return {params, form.tau, std::move(colors)};
}

colored_permutation multiply(const colored_permutation &a,
                             const colored_permutation &b) {
  require_same_group(a, b);
  const int r = a.r();
  const auto n = static_cast<std::size_t>(a.n());
  const ztau_form lhs = a.to_ztau();
  const ztau_form rhs = b.to_ztau();

  std::vector<int> tau_inv(n);
  for (std::size_t i = 0; i < n; ++i)
    tau_inv[static_cast<std::size_t>(lhs.tau[i] - 1)] = static_cast<int>(i) + 1;

  ztau_form product;
  product.z.resize(n);
  product.tau.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    const int shifted = rhs.z[static_cast<std::size_t>(tau_inv[w] - 1)];
    product.z[w] = (lhs.z[w] + shifted) % r;
  }
  for (std::size_t i = 0; i < n; ++i)
    product.tau[i] = lhs.tau[static_cast<std::size_t>(rhs.tau[i] - 1)];
  return colored_permutation::from_ztau(a.params(), product);
}

colored_permutation inverse(const colored_permutation &x) {
  const auto n = static_cast<std::size_t>(x.n());
  std::vector<int> values(n);
  std::vector<int> colors(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto target = static_cast<std::size_t>(x.values_[i] - 1);
    values[target] = static_cast<int>(i) + 1;
    colors[target] = (x.r() - x.colors_[i]) % x.r();
  }
  return {colored_permutation::unchecked_tag{}, x.params(), std::move(values),
          std::move(colors)};
}

colored_permutation negate(const colored_permutation &x) {
  if (x.r() != 2)
    throw domain_error("negate is defined only for r = 2");
  return rotate_colors(x);
}

colored_permutation rotate_colors(const colored_permutation &x) {
  std::vector<int> colors(x.colors().begin(), x.colors().end());
  for (int &c : colors)
    c = (c + 1) % x.r();
  return {x.params(), std::vector<int>(x.values().begin(), x.values().end()),
          std::move(colors)};
}

colored_permutation drop_prefix(const colored_permutation &x, int count) {
  if (count < 0 || count > x.n())
    throw domain_error("cannot drop " + std::to_string(count) +
                       " letters from a word of length " +
                       std::to_string(x.n()));
  const auto skip = static_cast<std::size_t>(count);
  const auto removed = std::span(x.values_).first(skip);
  std::vector<int> values;
  std::vector<int> colors;
  values.reserve(x.values_.size() - skip);
  colors.reserve(x.values_.size() - skip);
  for (std::size_t i = skip; i < x.values_.size(); ++i) {
    const int v = x.values_[i];
    const auto below = std::count_if(removed.begin(), removed.end(),
                                     [v](int u) { return u < v; });
    values.push_back(v - static_cast<int>(below));
    colors.push_back(x.colors_[i]);
  }
  return {colored_permutation::unchecked_tag{},
          group_params(x.r(), x.n() - count), std::move(values),
          std::move(colors)};
}

colored_permutation drop_first(const colored_permutation &x) {
  if (x.n() < 1)
    throw domain_error("drop_first requires n >= 1");
  return drop_prefix(x, 1);
}

colored_permutation drop_first_two(const colored_permutation &x) {
  if (x.n() < 2)
    throw domain_error("drop_first_two requires n >= 2");
  return drop_prefix(x, 2);
}

mpz_class rank(const colored_permutation &x) {
  const auto values = x.values();
  const auto colors = x.colors();
  const int n = x.n();
  mpz_class lehmer = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j)
      if (values[static_cast<std::size_t>(j)] <
          values[static_cast<std::size_t>(i)])
        ++smaller_after;
    lehmer = lehmer * (n - i) + smaller_after;
  }
  mpz_class color_word = 0;
  for (int c : colors)
    color_word = color_word * x.r() + c;
  return lehmer * power_mpz(x.r(), n) + color_word;
}

colored_permutation unrank(group_params params, const mpz_class &index) {
  if (index < 0 || index >= params.order())
    throw range_error("index " + index.get_str() + " outside [0, " +
                      params.order().get_str() + ")");
  const auto n = static_cast<std::size_t>(params.n);
  const mpz_class radix = power_mpz(params.r, params.n);
  mpz_class lehmer = index / radix;
  mpz_class color_word = index % radix;

  std::vector<int> colors(n);
  for (std::size_t i = n; i-- > 0;) {
    colors[i] = static_cast<int>(mpz_class(color_word % params.r).get_si());
    color_word /= params.r;
  }

  // Lehmer digits, least significant (radix 1) last.
  std::vector<int> code(n);
  for (std::size_t i = n; i-- > 0;) {
    const auto base = static_cast<long>(n - i);
    code[i] = static_cast<int>(mpz_class(lehmer % base).get_si());
    lehmer /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto at = pool.begin() + code[i];
    values[i] = *at;
    pool.erase(at);
  }
  return {params, std::move(values), std::move(colors)};
}

group_cursor::group_cursor(group_params params, std::uint64_t start)
    : current_(colored_permutation::identity(params)) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  const mpz_class index(static_cast<unsigned long>(start));
  if (index >= params.order()) {
    done_ = true;
    return;
  }
  current_ = unrank(params, index);
}

group_cursor::group_cursor(group_params params)
    : current_(colored_permutation::identity(params)) {}

void group_cursor::advance() {
  if (done_)
    return;
  auto &colors = current_.colors_;
  const int r = current_.r();
  for (std::size_t i = colors.size(); i-- > 0;) {
    if (++colors[i] < r)
      return;
    colors[i] = 0;
  }
  if (!std::next_permutation(current_.values_.begin(), current_.values_.end()))
    done_ = true;
}

colored_permutation parse_colored_permutation(std::string_view text, int r) {
  std::vector<int> values;
  std::vector<int> colors;
  std::istringstream stream{std::string(text)};
  std::string token;
  auto fail = [&](const std::string &why) {
    throw parameter_error("cannot parse token '" + token + "': " + why);
  };
  auto read_int = [&](std::string_view digits) {
    int out = 0;
    const auto *first = digits.data();
    const auto *last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (digits.empty() || ec != std::errc{} || ptr != last)
      fail("expected an integer");
    return out;
  };
  while (stream >> token) {
    std::string_view view = token;
    int color = 0;
    if (const auto open = view.find('['); open != std::string_view::npos) {
      if (view.back() != ']')
        fail("missing ']'");
      color = read_int(view.substr(open + 1, view.size() - open - 2));
      view = view.substr(0, open);
    } else if (!view.empty() && view.front() == '-') {
      if (r != 2)
        fail("the '-v' form is only valid for r = 2");
      color = 1;
      view.remove_prefix(1);
    }
    values.push_back(read_int(view));
    colors.push_back(color);
  }
  return {group_params(r, static_cast<int>(values.size())), std::move(values),
          std::move(colors)};
}

std::string to_string(const colored_permutation &x) {
  std::string out;
  for (int i = 0; i < x.n(); ++i) {
    if (i > 0)
      out += ' ';
    const auto letter = x.letter(static_cast<std::size_t>(i));
    out += std::to_string(letter.value) + "[" + std::to_string(letter.color) +
           "]";
  }
  return out;
}

} // namespace coldes
