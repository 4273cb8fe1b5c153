#ifndef COLDES_QPOLYNOMIAL_HPP
#define COLDES_QPOLYNOMIAL_HPP

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace coldes {

/// Dense polynomial in q with exact rational coefficients.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial has no
/// coefficients at all.
class qpolynomial {
public:
  qpolynomial() = default;
  qpolynomial(const mpq_class &constant);
  qpolynomial(const mpz_class &constant) : qpolynomial(mpq_class(constant)) {}
  qpolynomial(long constant) : qpolynomial(mpq_class(constant)) {}
  qpolynomial(int constant) : qpolynomial(mpq_class(constant)) {}
  /// Coefficient of q^i is coefficients[i].
  explicit qpolynomial(std::vector<mpq_class> coefficients);
  qpolynomial(std::initializer_list<long> coefficients);

  /// The monomial q^k.
  static qpolynomial monomial(int k, const mpq_class &coefficient = 1);
  static qpolynomial q() { return monomial(1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool has_integer_coefficients() const;

  /// Coefficient of q^k; zero outside the stored range.
  mpq_class coefficient(int k) const;
  const mpq_class &leading_coefficient() const;
  std::span<const mpq_class> coefficients() const noexcept { return coeffs_; }

  mpq_class evaluate(const mpq_class &at) const;
  mpq_class evaluate_at_one() const;

  qpolynomial &operator+=(const qpolynomial &rhs);
  qpolynomial &operator-=(const qpolynomial &rhs);
  qpolynomial &operator*=(const qpolynomial &rhs);
  qpolynomial &operator*=(const mpq_class &scalar);

  friend qpolynomial operator+(qpolynomial lhs, const qpolynomial &rhs) {
    return lhs += rhs;
  }
  friend qpolynomial operator-(qpolynomial lhs, const qpolynomial &rhs) {
    return lhs -= rhs;
  }
  friend qpolynomial operator*(const qpolynomial &lhs, const qpolynomial &rhs);
  friend qpolynomial operator*(qpolynomial lhs, const mpq_class &scalar) {
    return lhs *= scalar;
  }
  friend qpolynomial operator*(const mpq_class &scalar, qpolynomial rhs) {
    return rhs *= scalar;
  }
  qpolynomial operator-() const;

  friend bool operator==(const qpolynomial &, const qpolynomial &) = default;

private:
  void trim();

  std::vector<mpq_class> coeffs_;
};

qpolynomial power(const qpolynomial &base, unsigned exponent);

/// Euclidean division: a = quotient * b + remainder, deg remainder < deg b.
/// Throws domain_error when b is zero.
std::pair<qpolynomial, qpolynomial> divide(const qpolynomial &a,
                                           const qpolynomial &b);

/// a / b when b divides a; throws integrality_error otherwise.
qpolynomial exact_divide(const qpolynomial &a, const qpolynomial &b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
qpolynomial gcd(const qpolynomial &a, const qpolynomial &b);

/// `c0 + c1*q + c2*q^2 ...`, zero terms omitted, unit coefficients elided,
/// negative terms written with ` - `. The zero polynomial prints as `0`.
std::string to_string(const qpolynomial &p);

std::ostream &operator<<(std::ostream &os, const qpolynomial &p);

} // namespace coldes

#endif
