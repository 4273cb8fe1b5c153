#ifndef COLDES_QRATIONAL_HPP
#define COLDES_QRATIONAL_HPP

#include <optional>
#include <ostream>
#include <string>

#include "coldes/qpolynomial.hpp"

namespace coldes {

/// Rational function numerator/denominator in q over the rationals.
///
/// Always canonical: denominator nonzero and monic, gcd(numerator,
/// denominator) = 1. Zero is 0/1.
class qrational_function {
public:
  qrational_function() : denominator_(1) {}
  qrational_function(qpolynomial polynomial)
      : numerator_(std::move(polynomial)), denominator_(1) {}
  qrational_function(long constant) : qrational_function(qpolynomial(constant)) {}
  /// Throws domain_error when denominator is zero.
  qrational_function(qpolynomial numerator, qpolynomial denominator);

  const qpolynomial &numerator() const noexcept { return numerator_; }
  const qpolynomial &denominator() const noexcept { return denominator_; }

  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool is_polynomial() const noexcept { return denominator_.degree() == 0; }
  /// The numerator when the denominator is 1.
  std::optional<qpolynomial> as_polynomial() const;

  qrational_function reciprocal() const;

  qrational_function &operator+=(const qrational_function &rhs);
  qrational_function &operator-=(const qrational_function &rhs);
  qrational_function &operator*=(const qrational_function &rhs);
  qrational_function &operator/=(const qrational_function &rhs);

  friend qrational_function operator+(qrational_function a,
                                      const qrational_function &b) {
    return a += b;
  }
  friend qrational_function operator-(qrational_function a,
                                      const qrational_function &b) {
    return a -= b;
  }
  friend qrational_function operator*(qrational_function a,
                                      const qrational_function &b) {
    return a *= b;
  }
  friend qrational_function operator/(qrational_function a,
                                      const qrational_function &b) {
    return a /= b;
  }
  qrational_function operator-() const;

  friend bool operator==(const qrational_function &,
                         const qrational_function &) = default;

private:
  void canonicalize();

  qpolynomial numerator_;
  qpolynomial denominator_;
};

/// `numerator` alone when the denominator is 1, else `(num)/(den)`.
std::string to_string(const qrational_function &f);

std::ostream &operator<<(std::ostream &os, const qrational_function &f);

} // namespace coldes

#endif
