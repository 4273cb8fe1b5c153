#include "coldes/harness.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "coldes/closed_formulas.hpp"
#include "coldes/errors.hpp"
#include "coldes/gen_series.hpp"
#include "coldes/recurrences.hpp"

namespace coldes {

namespace {

using kind = descent_statistic::kind;

bool is_signed_kind(const descent_statistic &stat) {
  return stat.which() == kind::pdes || stat.which() == kind::ndes;
}

bool is_cd_kind(const descent_statistic &stat) {
  return stat.which() == kind::pndes || stat.which() == kind::des_cd;
}

const qpolynomial &polynomial_or_throw(const coefficient_outcome &outcome) {
  if (const auto *p = std::get_if<qpolynomial>(&outcome))
    return *p;
  const auto &report = std::get<non_polynomial_coefficient>(outcome);
  throw integrality_error("n! [x^" + std::to_string(report.n) +
                          "] of the series is not a polynomial in q: " +
                          to_string(report.value));
}

template <typename F> qpolynomial formula_polynomial(int n, F count_at) {
  std::vector<mpq_class> coeffs;
  for (int m = 0; m <= n; ++m)
    coeffs.emplace_back(count_at(m));
  return qpolynomial(std::move(coeffs));
}

qpolynomial cc_formula_polynomial(int r, int n) {
  return formula_polynomial(n, [&](int m) { return cc_count(r, n, m); });
}

} // namespace

std::string method_name(method m) {
  switch (m) {
  case method::brute:
    return "brute";
  case method::formula:
    return "formula";
  case method::blocks:
    return "blocks";
  case method::recurrence:
    return "recurrence";
  case method::series:
    return "series";
  }
  return "unknown";
}

method parse_method(std::string_view name) {
  for (method m : {method::brute, method::formula, method::blocks,
                   method::recurrence, method::series})
    if (method_name(m) == name)
      return m;
  throw domain_error("unknown method '" + std::string(name) + "'");
}

descent_distribution compute_distribution(group_params params,
                                          const descent_statistic &stat,
                                          method how,
                                          const brute_options &brute) {
  stat.validate(params.r);
  const int r = params.r;
  const int n = params.n;
  const auto unavailable = [&] {
    return method_unavailable("method '" + method_name(how) +
                              "' has no route for " + stat.name());
  };

  qpolynomial poly;
  switch (how) {
  case method::brute:
    return distribution(params, stat, brute);
  case method::formula:
    if (stat.which() == kind::pndes)
      poly = formula_polynomial(n, [&](int m) { return pndes_count(n, m); });
    else if (is_signed_kind(stat))
      poly = formula_polynomial(n, [&](int m) { return pdes_count(n, m); });
    else if (stat.which() == kind::des_cd)
      poly = formula_polynomial(n, [&](int m) { return cd_count(r, n, m); });
    else
      poly = cc_formula_polynomial(r, n);
    break;
  case method::blocks:
    if (!is_cd_kind(stat))
      throw unavailable();
    poly = composition_sum_poly(r, n);
    break;
  case method::recurrence:
    if (is_signed_kind(stat))
      poly = p_sequence(n).total.back();
    else if (is_cd_kind(stat))
      poly = a_sequence(r, n).back();
    else
      poly = g_sequence(r, n).total.back();
    break;
  case method::series:
    if (is_signed_kind(stat))
      poly = expand_P(n).total.back();
    else if (is_cd_kind(stat))
      poly = expand_A(r, n).back();
    else
      poly = polynomial_or_throw(expand_G(r, n).total.back());
    break;
  }
  auto out = distribution_from_polynomial(r, n, stat, method_name(how), poly);
  if (out.total() != params.order())
    throw integrality_error("counts from method '" + method_name(how) +
                            "' sum to " + out.total().get_str() +
                            ", not the group order " + params.order().get_str());
  return out;
}

// ---------------------------------------------------------------------------

bool verify_report::all_expected_agree() const {
  for (const auto &cell : cells)
    if (cell.status == cell_status::disagree)
      return false;
  return true;
}

namespace {

class cell_recorder {
public:
  cell_recorder(int r, int n, verify_report &report)
      : r_(r), n_(n), report_(report) {}

  void check(std::string name, const qpolynomial &truth,
             const std::function<qpolynomial()> &candidate,
             bool quarantine = false) {
    verify_cell cell{std::move(name), r_, n_, cell_status::agree, {}, {}};
    try {
      const qpolynomial got = candidate();
      if (!(got == truth)) {
        cell.status = cell_status::disagree;
        cell.expected = to_string(truth);
        cell.actual = to_string(got);
      }
    } catch (const std::exception &e) {
      cell.status = cell_status::disagree;
      cell.expected = to_string(truth);
      cell.actual = std::string("error: ") + e.what();
    }
    (quarantine ? report_.quarantined : report_.cells).push_back(std::move(cell));
  }

private:
  int r_;
  int n_;
  verify_report &report_;
};

} // namespace

verify_report run_verify(int r_max, int n_max, const brute_options &options) {
  if (r_max < 1 || n_max < 0)
    throw domain_error("verify needs r_max >= 1 and n_max >= 0");
  const group_params largest(r_max, n_max);
  if (const auto order = largest.order_u64(); !order || *order > options.cap)
    throw budget_exceeded(order.value_or(UINT64_MAX), options.cap);

  verify_report report;
  report.r_max = r_max;
  report.n_max = n_max;
  const auto at = [](int n) { return static_cast<std::size_t>(n); };

  for (int r = 1; r <= r_max; ++r) {
    const auto g = g_sequence(r, n_max);
    const auto g_series = expand_G(r, n_max);
    std::vector<qpolynomial> a;
    std::vector<qpolynomial> a_series;
    if (r >= 2) {
      a = a_sequence(r, n_max);
      a_series = expand_A(r, n_max);
    }
    poly_sequence_triple p;
    poly_sequence_triple p_series;
    std::vector<qpolynomial> p_powers;
    if (r == 2) {
      p = p_sequence(n_max);
      p_series = expand_P(n_max);
      p_powers = p_power_sum(n_max);
    }
    const bool cc_closed_expected = r == 2;

    for (int n = 0; n <= n_max; ++n) {
      const group_params params(r, n);
      cell_recorder cell(r, n, report);
      const auto pairs = distribution_all_pairs(params, options);
      const qpolynomial truth_cc = pairs.at({0, 0}).to_polynomial();
      const auto split =
          first_letter_split(params, descent_statistic::des_cc(0), options);

      for (int c = 1; c < r; ++c)
        cell.check("cc-color-rotation c=" + std::to_string(c), truth_cc,
                   [&] { return pairs.at({c, c}).to_polynomial(); });
      cell.check("cc-recurrence", truth_cc, [&] { return g.total[at(n)]; });
      cell.check("cc-recurrence-first-color-0", split.first,
                 [&] { return g.plus[at(n)]; });
      cell.check("cc-recurrence-first-color-nonzero", split.second,
                 [&] { return g.minus[at(n)]; });
      cell.check(
          "cc-formula", truth_cc, [&] { return cc_formula_polynomial(r, n); },
          !cc_closed_expected);
      cell.check(
          "cc-series", truth_cc,
          [&] { return polynomial_or_throw(g_series.total[at(n)]); },
          !cc_closed_expected);
      cell.check(
          "cc-series-first-color-0", split.first,
          [&] { return polynomial_or_throw(g_series.plus[at(n)]); },
          !cc_closed_expected);
      cell.check(
          "cc-series-first-color-nonzero", split.second,
          [&] { return polynomial_or_throw(g_series.minus[at(n)]); },
          !cc_closed_expected);

      if (r >= 2) {
        const qpolynomial truth_cd = pairs.at({0, 1}).to_polynomial();
        for (int c = 0; c < r; ++c)
          for (int d = c + 1; d < r; ++d)
            if (c != 0 || d != 1)
              cell.check("cd-pair-independence c=" + std::to_string(c) +
                             " d=" + std::to_string(d),
                         truth_cd,
                         [&] { return pairs.at({c, d}).to_polynomial(); });
        cell.check("cd-formula", truth_cd, [&] {
          return formula_polynomial(n, [&](int m) { return cd_count(r, n, m); });
        });
        cell.check("cd-blocks-formula", truth_cd, [&] {
          return formula_polynomial(
              n, [&](int m) { return cd_count_blocks(r, n, m); });
        });
        cell.check("cd-composition-sum", truth_cd,
                   [&] { return composition_sum_poly(r, n); });
        cell.check("cd-recurrence", truth_cd, [&] { return a[at(n)]; });
        cell.check("cd-series", truth_cd, [&] { return a_series[at(n)]; });
      }

      if (r == 2) {
        const qpolynomial truth_p = pairs.at({0, 0}).to_polynomial();
        const qpolynomial truth_pn = pairs.at({0, 1}).to_polynomial();
        cell.check("ndes-negation", truth_p,
                   [&] { return pairs.at({1, 1}).to_polynomial(); });
        cell.check("pdes-formula", truth_p, [&] {
          return formula_polynomial(n, [&](int m) { return pdes_count(n, m); });
        });
        cell.check("pdes-recurrence", truth_p, [&] { return p.total[at(n)]; });
        cell.check("pdes-recurrence-first-positive", split.first,
                   [&] { return p.plus[at(n)]; });
        cell.check("pdes-recurrence-first-negative", split.second,
                   [&] { return p.minus[at(n)]; });
        cell.check("pdes-series", truth_p,
                   [&] { return p_series.total[at(n)]; });
        cell.check("pdes-series-first-positive", split.first,
                   [&] { return p_series.plus[at(n)]; });
        cell.check("pdes-series-first-negative", split.second,
                   [&] { return p_series.minus[at(n)]; });
        cell.check("pdes-power-sum", truth_p,
                   [&] { return p_powers[at(n)]; });
        cell.check("pndes-formula", truth_pn, [&] {
          return formula_polynomial(n,
                                    [&](int m) { return pndes_count(n, m); });
        });
        cell.check("pndes-from-blocks", truth_pn, [&] {
          qpolynomial hist;
          for (const auto &x : enumerate(params))
            hist += qpolynomial::monomial(pndes_from_blocks(x));
          return hist;
        });
      }
    }
  }
  return report;
}

namespace {

const char *status_label(cell_status s) {
  switch (s) {
  case cell_status::agree:
    return "agree";
  case cell_status::disagree:
    return "DISAGREE";
  case cell_status::skipped:
    return "skipped";
  }
  return "?";
}

void write_cell(std::ostringstream &os, const verify_cell &cell) {
  os << std::left << std::setw(9) << status_label(cell.status) << " r=" << cell.r
     << " n=" << cell.n << " " << cell.check;
  if (cell.status == cell_status::disagree)
    os << "  expected: " << cell.expected << "  got: " << cell.actual;
  os << "\n";
}

std::size_t count_status(const std::vector<verify_cell> &cells,
                         cell_status status) {
  std::size_t out = 0;
  for (const auto &c : cells)
    out += c.status == status ? 1 : 0;
  return out;
}

} // namespace

std::string format_text(const verify_report &report) {
  std::ostringstream os;
  os << "verify r=1.." << report.r_max << " n=0.." << report.n_max << "\n";
  for (const auto &cell : report.cells)
    write_cell(os, cell);
  if (!report.quarantined.empty()) {
    os << "quarantined ((c,c)-descent closed formula and G_r series, r != 2):\n";
    for (const auto &cell : report.quarantined)
      write_cell(os, cell);
  }
  os << "summary: " << count_status(report.cells, cell_status::agree)
     << " cells agree, " << count_status(report.cells, cell_status::disagree)
     << " disagree; " << report.quarantined.size() << " quarantined ("
     << count_status(report.quarantined, cell_status::disagree)
     << " disagree)\n";
  os << (report.all_expected_agree() ? "result: PASS" : "result: FAIL") << "\n";
  return os.str();
}

std::string format_json(const verify_report &report) {
  const auto cell_json = [](const verify_cell &cell) {
    nlohmann::ordered_json j;
    j["check"] = cell.check;
    j["r"] = cell.r;
    j["n"] = cell.n;
    j["status"] = cell.status == cell_status::agree      ? "agree"
                  : cell.status == cell_status::disagree ? "disagree"
                                                         : "skipped";
    if (cell.status == cell_status::disagree) {
      j["expected"] = cell.expected;
      j["actual"] = cell.actual;
    }
    return j;
  };
  nlohmann::ordered_json doc;
  doc["r_max"] = report.r_max;
  doc["n_max"] = report.n_max;
  doc["pass"] = report.all_expected_agree();
  doc["cells"] = nlohmann::ordered_json::array();
  for (const auto &cell : report.cells)
    doc["cells"].push_back(cell_json(cell));
  doc["quarantined"] = nlohmann::ordered_json::array();
  for (const auto &cell : report.quarantined)
    doc["quarantined"].push_back(cell_json(cell));
  return doc.dump(1) + "\n";
}

// ---------------------------------------------------------------------------

std::vector<identity_row> run_identity(int n_max) {
  if (n_max < 0)
    throw domain_error("n_max must be nonnegative");
  std::vector<identity_row> rows;
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; 2 * m <= n; ++m) {
      identity_row row{n, m, identity_r2_lhs(n, m),
                       binomial(n + 1, n - 2 * m), false};
      row.holds = row.lhs == mpq_class(row.rhs);
      rows.push_back(std::move(row));
    }
  return rows;
}

// ---------------------------------------------------------------------------

erratum_report run_erratum(int r, int n_max, const brute_options &options) {
  if (r < 1 || n_max < 0)
    throw domain_error("erratum needs r >= 1 and n_max >= 0");
  erratum_report report;
  report.r = r;
  report.n_max = n_max;
  const auto g = g_sequence(r, n_max);
  const auto series = expand_G(r, n_max);
  for (int n = 0; n <= n_max; ++n) {
    erratum_row row;
    row.n = n;
    row.truth = g.total[static_cast<std::size_t>(n)];
    const group_params params(r, n);
    if (const auto order = params.order_u64(); order && *order <= options.cap)
      row.brute = distribution(params, descent_statistic::des_cc(0), options)
                      .to_polynomial();
    for (int m = 0; m <= n; ++m)
      row.formula.push_back(cc_count(r, n, m));
    row.series = series.total[static_cast<std::size_t>(n)];
    row.formula_agrees = qpolynomial(row.formula) == row.truth;
    const auto *poly = std::get_if<qpolynomial>(&row.series);
    row.series_agrees = poly && *poly == row.truth;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_text(const erratum_report &report) {
  std::ostringstream os;
  os << "(c,c)-descent report r=" << report.r << " n=0.." << report.n_max
     << "\n";
  os << "truth: g_{r,n} recurrence, cross-checked by enumeration where shown\n";
  int formula_ok = 0;
  int series_ok = 0;
  for (const auto &row : report.rows) {
    const auto *series_poly = std::get_if<qpolynomial>(&row.series);
    os << "n=" << row.n << "\n";
    os << "  " << std::left << std::setw(4) << "m" << std::setw(14) << "truth"
       << std::setw(14) << "brute" << std::setw(14) << "formula"
       << "series\n";
    for (int m = 0; m <= row.n; ++m) {
      const mpq_class truth = row.truth.coefficient(m);
      os << "  " << std::setw(4) << m << std::setw(14) << truth.get_str()
         << std::setw(14)
         << (row.brute ? row.brute->coefficient(m).get_str() : "-")
         << std::setw(14) << row.formula[static_cast<std::size_t>(m)].get_str()
         << (series_poly ? series_poly->coefficient(m).get_str() : "-")
         << "\n";
    }
    os << "  verdict n=" << row.n << ": formula ";
    if (row.formula_agrees) {
      os << "agrees";
      ++formula_ok;
    } else {
      os << "disagrees (";
      bool first = true;
      for (int m = 0; m <= row.n; ++m) {
        const mpq_class &claimed = row.formula[static_cast<std::size_t>(m)];
        const mpq_class truth = row.truth.coefficient(m);
        if (claimed == truth)
          continue;
        os << (first ? "" : ", ") << "m=" << m << ": " << claimed.get_str()
           << " vs " << truth.get_str();
        first = false;
      }
      os << ")";
    }
    os << "; series ";
    if (row.series_agrees) {
      os << "agrees";
      ++series_ok;
    } else if (series_poly) {
      os << "disagrees: " << to_string(*series_poly);
    } else {
      os << "non-polynomial: "
         << to_string(std::get<non_polynomial_coefficient>(row.series).value);
    }
    if (row.brute && !(*row.brute == row.truth))
      os << "; ENUMERATION DISAGREES WITH RECURRENCE";
    os << "\n";
  }
  const auto total = report.rows.size();
  os << "summary: formula agrees for " << formula_ok << " of " << total
     << " values of n; series agrees for " << series_ok << " of " << total
     << "\n";
  return os.str();
}

} // namespace coldes
