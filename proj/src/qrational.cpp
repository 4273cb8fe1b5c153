#include "coldes/qrational.hpp"

#include "coldes/errors.hpp"

namespace coldes {

qrational_function::qrational_function(qpolynomial numerator,
                                       qpolynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero())
    throw domain_error("rational function with zero denominator");
  canonicalize();
}

void qrational_function::canonicalize() {
  if (numerator_.is_zero()) {
    denominator_ = 1;
    return;
  }
  const qpolynomial common = gcd(numerator_, denominator_);
  if (common.degree() > 0) {
    numerator_ = exact_divide(numerator_, common);
    denominator_ = exact_divide(denominator_, common);
  }
  const mpq_class lead = denominator_.leading_coefficient();
  if (lead != 1) {
    const mpq_class scale = 1 / lead;
    numerator_ *= scale;
    denominator_ *= scale;
  }
}

std::optional<qpolynomial> qrational_function::as_polynomial() const {
  if (!is_polynomial())
    return std::nullopt;
  return numerator_;
}

qrational_function qrational_function::reciprocal() const {
  if (is_zero())
    throw domain_error("reciprocal of the zero rational function");
  return {denominator_, numerator_};
}

qrational_function &
qrational_function::operator+=(const qrational_function &rhs) {
  if (denominator_ == rhs.denominator_) {
    numerator_ += rhs.numerator_;
  } else {
    numerator_ = numerator_ * rhs.denominator_ + rhs.numerator_ * denominator_;
    denominator_ *= rhs.denominator_;
  }
  canonicalize();
  return *this;
}

qrational_function &
qrational_function::operator-=(const qrational_function &rhs) {
  return *this += -rhs;
}

qrational_function &
qrational_function::operator*=(const qrational_function &rhs) {
  numerator_ *= rhs.numerator_;
  denominator_ *= rhs.denominator_;
  canonicalize();
  return *this;
}

qrational_function &
qrational_function::operator/=(const qrational_function &rhs) {
  return *this *= rhs.reciprocal();
}

qrational_function qrational_function::operator-() const {
  qrational_function out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

std::string to_string(const qrational_function &f) {
  if (f.is_polynomial())
    return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) +
         ")";
}

std::ostream &operator<<(std::ostream &os, const qrational_function &f) {
  return os << to_string(f);
}

} // namespace coldes
