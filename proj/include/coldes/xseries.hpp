#ifndef COLDES_XSERIES_HPP
#define COLDES_XSERIES_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coldes/bigint.hpp"
#include "coldes/errors.hpp"
#include "coldes/qpolynomial.hpp"
#include "coldes/qrational.hpp"

namespace coldes {

/// Multiplicative inverse of a series coefficient. Throws
/// singular_series_error when the coefficient is not a unit of its ring.
inline qpolynomial coefficient_inverse(const qpolynomial &c) {
  if (c.is_zero() || !c.is_constant())
    throw singular_series_error("constant term " + to_string(c) +
                                " is not invertible in Q[q]");
  return qpolynomial(mpq_class(1 / c.coefficient(0)));
}

inline qrational_function coefficient_inverse(const qrational_function &c) {
  if (c.is_zero())
    throw singular_series_error("constant term is zero");
  return c.reciprocal();
}

/// Power series in x truncated after x^order, i.e. arithmetic modulo
/// x^{order+1}. Coeff is qpolynomial or qrational_function.
template <typename Coeff> class truncated_series {
public:
  explicit truncated_series(int order = 0)
      : coeffs_(static_cast<std::size_t>(checked(order)) + 1) {}

  /// Missing coefficients are zero; those beyond `order` are dropped.
  truncated_series(int order, std::vector<Coeff> coefficients)
      : truncated_series(order) {
    const auto keep = std::min(coefficients.size(), coeffs_.size());
    for (std::size_t k = 0; k < keep; ++k)
      coeffs_[k] = std::move(coefficients[k]);
  }

  static truncated_series constant(const Coeff &c, int order) {
    truncated_series out(order);
    out.coeffs_[0] = c;
    return out;
  }

  /// The series x (zero when order is 0).
  static truncated_series x(int order) {
    truncated_series out(order);
    if (order >= 1)
      out.coeffs_[1] = Coeff(1);
    return out;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  const Coeff &operator[](int k) const {
    return coeffs_.at(static_cast<std::size_t>(k));
  }
  Coeff &operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  truncated_series &operator+=(const truncated_series &rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  truncated_series &operator-=(const truncated_series &rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      coeffs_[k] -= rhs.coeffs_[k];
    return *this;
  }
  truncated_series &operator*=(const Coeff &scalar) {
    for (auto &c : coeffs_)
      c *= scalar;
    return *this;
  }

  friend truncated_series operator+(truncated_series a,
                                    const truncated_series &b) {
    return a += b;
  }
  friend truncated_series operator-(truncated_series a,
                                    const truncated_series &b) {
    return a -= b;
  }
  friend truncated_series operator*(truncated_series a, const Coeff &scalar) {
    return a *= scalar;
  }
  friend truncated_series operator*(const truncated_series &a,
                                    const truncated_series &b) {
    a.require_same_order(b);
    truncated_series out(a.order());
    const auto size = a.coeffs_.size();
    for (std::size_t i = 0; i < size; ++i) {
      if (a.coeffs_[i].is_zero())
        continue;
      for (std::size_t j = 0; i + j < size; ++j)
        if (!b.coeffs_[j].is_zero())
          out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  truncated_series &operator*=(const truncated_series &rhs) {
    return *this = *this * rhs;
  }
  truncated_series operator-() const {
    truncated_series out = *this;
    for (auto &c : out.coeffs_)
      c = -c;
    return out;
  }

  /// 1 / s. Throws singular_series_error when the constant term is not a
  /// unit.
  truncated_series reciprocal() const {
    const Coeff inv = coefficient_inverse(coeffs_[0]);
    truncated_series out(order());
    out.coeffs_[0] = inv;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      Coeff acc;
      for (std::size_t j = 1; j <= k; ++j)
        if (!coeffs_[j].is_zero())
          acc += coeffs_[j] * out.coeffs_[k - j];
      out.coeffs_[k] = -(acc * inv);
    }
    return out;
  }

  friend bool operator==(const truncated_series &,
                         const truncated_series &) = default;

private:
  static int checked(int order) {
    if (order < 0)
      throw domain_error("series order must be nonnegative");
    return order;
  }

  void require_same_order(const truncated_series &rhs) const {
    if (rhs.order() != order())
      throw parameter_error("series of different truncation orders");
  }

  std::vector<Coeff> coeffs_;
};

template <typename Coeff>
truncated_series<Coeff> power(const truncated_series<Coeff> &base,
                              unsigned exponent) {
  auto out = truncated_series<Coeff>::constant(Coeff(1), base.order());
  for (unsigned i = 0; i < exponent; ++i)
    out *= base;
  return out;
}

/// Series with polynomial coefficients.
using qpoly_series = truncated_series<qpolynomial>;
/// Series whose coefficients live in the field of rational functions of q.
using xseries = truncated_series<qrational_function>;

/// e^{u x}: the coefficient of x^k is u^k / k!.
template <typename Coeff>
truncated_series<Coeff> exp_series(const Coeff &multiplier, int order) {
  truncated_series<Coeff> out(order);
  Coeff term(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0)
      term *= multiplier;
    out[k] = term * Coeff(qpolynomial(mpq_class(1, factorial(k))));
  }
  return out;
}

/// e^{(q-1)x} with polynomial coefficients.
inline qpoly_series exp_qx(int order) {
  return exp_series(qpolynomial{-1, 1}, order);
}

/// n! times the coefficient of x^n; every resulting coefficient must be an
/// integer (throws integrality_error otherwise).
qpolynomial integral_scale(const qpoly_series &s, int n);

/// A scaled series coefficient that is not a polynomial in q.
struct non_polynomial_coefficient {
  int n = 0;
  qrational_function value; // n! times the coefficient of x^n

  friend bool operator==(const non_polynomial_coefficient &,
                         const non_polynomial_coefficient &) = default;
};

using coefficient_outcome =
    std::variant<qpolynomial, non_polynomial_coefficient>;

/// n! times the coefficient of x^n, or a report when it is not a polynomial.
/// A polynomial with a non-integer coefficient throws integrality_error.
coefficient_outcome integral_scale(const xseries &s, int n);

} // namespace coldes

#endif
