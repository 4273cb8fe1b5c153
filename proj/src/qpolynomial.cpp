#include "coldes/qpolynomial.hpp"

#include <algorithm>

#include "coldes/errors.hpp"

namespace coldes {

qpolynomial::qpolynomial(const mpq_class &constant) {
  if (constant != 0)
    coeffs_.push_back(constant);
}

qpolynomial::qpolynomial(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto &c : coeffs_)
    c.canonicalize();
  trim();
}

qpolynomial::qpolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients)
    coeffs_.emplace_back(c);
  trim();
}

qpolynomial qpolynomial::monomial(int k, const mpq_class &coefficient) {
  if (k < 0)
    throw domain_error("negative exponent for a monomial");
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = coefficient;
  return qpolynomial(std::move(coeffs));
}

void qpolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

bool qpolynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class &c) { return c.get_den() == 1; });
}

mpq_class qpolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size()))
    return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const mpq_class &qpolynomial::leading_coefficient() const {
  if (coeffs_.empty())
    throw domain_error("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

mpq_class qpolynomial::evaluate(const mpq_class &at) const {
  mpq_class out = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    out = out * at + *it;
  return out;
}

mpq_class qpolynomial::evaluate_at_one() const {
  mpq_class out = 0;
  for (const auto &c : coeffs_)
    out += c;
  return out;
}

qpolynomial &qpolynomial::operator+=(const qpolynomial &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

qpolynomial &qpolynomial::operator-=(const qpolynomial &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

qpolynomial operator*(const qpolynomial &lhs, const qpolynomial &rhs) {
  if (lhs.is_zero() || rhs.is_zero())
    return {};
  std::vector<mpq_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return qpolynomial(std::move(out));
}

qpolynomial &qpolynomial::operator*=(const qpolynomial &rhs) {
  *this = *this * rhs;
  return *this;
}

qpolynomial &qpolynomial::operator*=(const mpq_class &scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto &c : coeffs_)
    c *= scalar;
  return *this;
}

qpolynomial qpolynomial::operator-() const {
  qpolynomial out = *this;
  for (auto &c : out.coeffs_)
    c = -c;
  return out;
}

qpolynomial power(const qpolynomial &base, unsigned exponent) {
  qpolynomial out = 1;
  qpolynomial square = base;
  while (exponent > 0) {
    if (exponent & 1U)
      out *= square;
    exponent >>= 1U;
    if (exponent > 0)
      square *= square;
  }
  return out;
}

std::pair<qpolynomial, qpolynomial> divide(const qpolynomial &a,
                                           const qpolynomial &b) {
  if (b.is_zero())
    throw domain_error("polynomial division by zero");
  qpolynomial remainder = a;
  if (a.degree() < b.degree())
    return {qpolynomial{}, remainder};
  std::vector<mpq_class> quotient(
      static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const mpq_class &lead = b.leading_coefficient();
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const int shift = remainder.degree() - b.degree();
    const mpq_class factor = remainder.leading_coefficient() / lead;
    quotient[static_cast<std::size_t>(shift)] = factor;
    remainder -= qpolynomial::monomial(shift, factor) * b;
  }
  return {qpolynomial(std::move(quotient)), remainder};
}

qpolynomial exact_divide(const qpolynomial &a, const qpolynomial &b) {
  auto [quotient, remainder] = divide(a, b);
  if (!remainder.is_zero())
    throw integrality_error("(" + to_string(b) + ") does not divide (" +
                            to_string(a) + ")");
  return quotient;
}

qpolynomial gcd(const qpolynomial &a, const qpolynomial &b) {
  qpolynomial x = a;
  qpolynomial y = b;
  while (!y.is_zero()) {
    qpolynomial rem = divide(x, y).second;
    x = std::move(y);
    y = std::move(rem);
  }
  if (x.is_zero())
    return x;
  return x * mpq_class(1 / x.leading_coefficient());
}

std::string to_string(const qpolynomial &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const mpq_class &c = coeffs[k];
    if (c == 0)
      continue;
    const bool negative = c < 0;
    const mpq_class magnitude = negative ? mpq_class(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1)
      out += magnitude.get_str() + "*";
    out += "q";
    if (k > 1)
      out += "^" + std::to_string(k);
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const qpolynomial &p) {
  return os << to_string(p);
}

} // namespace coldes
