#include "coldes/distribution.hpp"

#include <json.hpp>

#include "coldes/errors.hpp"

namespace coldes {

mpz_class descent_distribution::total() const {
  mpz_class out = 0;
  for (const auto &[m, c] : counts)
    out += c;
  return out;
}

qpolynomial descent_distribution::to_polynomial() const {
  qpolynomial out;
  for (const auto &[m, c] : counts)
    out += qpolynomial::monomial(m, mpq_class(c));
  return out;
}

descent_distribution
distribution_from_polynomial(int r, int n, const descent_statistic &stat,
                             std::string method, const qpolynomial &p) {
  descent_distribution out{r, n, stat, std::move(method), {}};
  const auto coeffs = p.coefficients();
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const mpq_class &c = coeffs[m];
    if (c.get_den() != 1 || c < 0)
      throw integrality_error("coefficient of q^" + std::to_string(m) + " is " +
                              c.get_str() +
                              ", not a nonnegative integer count");
    if (c != 0)
      out.counts.emplace(static_cast<int>(m), c.get_num());
  }
  return out;
}

namespace {

nlohmann::ordered_json counts_object(const descent_distribution &d) {
  auto out = nlohmann::ordered_json::object();
  for (const auto &[m, c] : d.counts)
    out[std::to_string(m)] = c.get_str();
  return out;
}

} // namespace

std::string counts_json(const descent_distribution &d) {
  return counts_object(d).dump();
}

std::string to_json(const descent_distribution &d) {
  nlohmann::ordered_json doc;
  doc["r"] = d.r;
  doc["n"] = d.n;
  doc["stat"] = d.stat.name();
  using kind = descent_statistic::kind;
  if (d.stat.which() == kind::des_cd || d.stat.which() == kind::des_cc)
    doc["c"] = d.stat.left_color();
  if (d.stat.which() == kind::des_cd)
    doc["d"] = d.stat.right_color();
  doc["method"] = d.method;
  doc["distribution"] = counts_object(d);
  return doc.dump();
}

std::string to_csv(const descent_distribution &d) {
  std::string out = "m,count\n";
  for (const auto &[m, c] : d.counts)
    out += std::to_string(m) + "," + c.get_str() + "\n";
  return out;
}

} // namespace coldes
