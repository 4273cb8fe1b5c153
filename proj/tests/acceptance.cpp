// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "coldes/bigint.hpp"
#include "coldes/brute_oracle.hpp"
#include "coldes/closed_formulas.hpp"
#include "coldes/gen_series.hpp"
#include "coldes/harness.hpp"
#include "coldes/recurrences.hpp"

using namespace coldes;

namespace {

// Pinned limits.
constexpr double identity_time_limit_seconds = 10.0;
constexpr int identity_n_max = 40;
constexpr int normalization_r_max = 6;
constexpr int normalization_n_max = 20;
constexpr int integrality_r_max = 5;
constexpr int integrality_n_max = 15;
constexpr int exhaustive_r_max = 4;
constexpr int exhaustive_n_max = 5;

struct outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string &why) {
    if (pass)
      detail = why;
    pass = false;
  }
};

mpz_class group_order(int r, int n) {
  return power(mpz_class(r), n) * factorial(n);
}

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, std::string> run_cdes(const std::string &args) {
  const std::string command = std::string(CDES_BINARY) + " " + args + " 2>/dev/null";
  std::string out;
  FILE *pipe = popen(command.c_str(), "r");
  if (pipe == nullptr)
    return {-1, ""};
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 1
outcome cross_method_matrix() {
  outcome o;
  std::size_t agree = 0;
  for (const auto &[r_max, n_max] : {std::pair{4, 5}, std::pair{2, 6}}) {
    const auto report = run_verify(r_max, n_max, {1, 100'000'000});
    for (const auto &cell : report.cells) {
      if (cell.status == cell_status::agree)
        ++agree;
      else
        o.fail(cell.check + " r=" + std::to_string(cell.r) +
               " n=" + std::to_string(cell.n) + " did not agree");
    }
  }
  if (o.pass)
    o.detail = std::to_string(agree) + " cells agree";
  return o;
}

// 2
outcome spot_values() {
  outcome o;
  const auto expect = [&](bool ok, const std::string &what) {
    if (!ok)
      o.fail(what);
  };
  const auto pn2 = distribution(group_params(2, 2), descent_statistic::pndes());
  expect(pn2.counts == std::map<int, mpz_class>{{0, 6}, {1, 2}}, "pndes on B_2");
  const auto pn4 = distribution(group_params(2, 4), descent_statistic::pndes());
  expect(pn4.counts == std::map<int, mpz_class>{{0, 120}, {1, 240}, {2, 24}},
         "pndes on B_4");
  const auto p = p_sequence(3);
  expect(p.total[2] == qpolynomial{7, 1}, "p_2");
  expect(p.total[3] == qpolynomial{37, 10, 1}, "p_3");
  expect(a_sequence(2, 2)[2] == qpolynomial{6, 2}, "A_{2,2}");
  expect(a_sequence(3, 2)[2] == qpolynomial{16, 2}, "A_{3,2}");
  expect(g_sequence(3, 2).total[2] == qpolynomial{17, 1}, "g_{3,2}");
  expect(g_sequence(1, 3).total[3] == qpolynomial{1, 4, 1}, "g_{1,3}");
  if (o.pass)
    o.detail = "8 values";
  return o;
}

// 3
outcome normalization() {
  outcome o;
  std::size_t checked = 0;
  const auto expect = [&](const qpolynomial &poly, int r, int n,
                          const std::string &what) {
    ++checked;
    if (poly.evaluate_at_one() != mpq_class(group_order(r, n)))
      o.fail(what + " at r=" + std::to_string(r) + " n=" + std::to_string(n));
  };
  const int n_max = normalization_n_max;
  const auto p = p_sequence(n_max);
  const auto pp = expand_P(n_max);
  for (int n = 0; n <= n_max; ++n) {
    expect(p.total[n], 2, n, "p_n");
    expect(pp.total[n], 2, n, "P series");
    mpz_class pn = 0;
    mpz_class pd = 0;
    for (int m = 0; m <= n; ++m) {
      pn += pndes_count(n, m);
      pd += pdes_count(n, m);
    }
    expect(qpolynomial(pn), 2, n, "pn-descent formula");
    expect(qpolynomial(pd), 2, n, "positive descent formula");
  }
  for (int r = 1; r <= normalization_r_max; ++r) {
    const auto g = g_sequence(r, n_max);
    for (int n = 0; n <= n_max; ++n)
      expect(g.total[n], r, n, "g_{r,n}");
    if (r < 2)
      continue;
    const auto a = a_sequence(r, n_max);
    const auto aa = expand_A(r, n_max);
    for (int n = 0; n <= n_max; ++n) {
      expect(a[n], r, n, "A_{r,n}");
      expect(aa[n], r, n, "A series");
      mpz_class cd = 0;
      mpz_class cd_blocks = 0;
      for (int m = 0; m <= n; ++m) {
        cd += cd_count(r, n, m);
        if (n >= 1)
          cd_blocks += cd_count_blocks(r, n, m);
      }
      expect(qpolynomial(cd), r, n, "(c,d) formula");
      if (n >= 1)
        expect(qpolynomial(cd_blocks), r, n, "(c,d) block formula");
      expect(composition_sum_poly(r, n), r, n, "composition sum");
    }
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " polynomials";
  return o;
}

// 4
outcome identity_r2_timed() {
  outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_identity(identity_n_max);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  for (const auto &row : rows)
    if (!row.holds)
      o.fail("fails at n=" + std::to_string(row.n) + " m=" + std::to_string(row.m));
  if (seconds >= identity_time_limit_seconds)
    o.fail("took " + std::to_string(seconds) + " s");
  if (o.pass) {
    std::ostringstream ss;
    ss << rows.size() << " (n,m) pairs in " << std::fixed << std::setprecision(3)
       << seconds << " s";
    o.detail = ss.str();
  }
  return o;
}

// 5
outcome bijection_symmetry() {
  outcome o;
  for (int n = 0; n <= exhaustive_n_max; ++n) {
    const group_params g(2, n);
    for (const auto &x : enumerate(g))
      if (count(negate(x), descent_statistic::pdes()) !=
              count(x, descent_statistic::ndes()) ||
          count(negate(x), descent_statistic::ndes()) !=
              count(x, descent_statistic::pdes()))
        o.fail("negation does not swap pdes and ndes on " + to_string(x));
    if (distribution(g, descent_statistic::pdes()).counts !=
        distribution(g, descent_statistic::ndes()).counts)
      o.fail("pdes and ndes differ at n=" + std::to_string(n));
  }
  for (int r = 2; r <= exhaustive_r_max; ++r)
    for (int n = 0; n <= exhaustive_n_max; ++n) {
      const auto all = distribution_all_pairs(group_params(r, n));
      for (const auto &[pair, d] : all) {
        const auto &reference = pair.first < pair.second ? all.at({0, 1}) : all.at({0, 0});
        if (!d.same_counts(reference))
          o.fail("(" + std::to_string(pair.first) + "," +
                 std::to_string(pair.second) + ") differs at r=" +
                 std::to_string(r) + " n=" + std::to_string(n));
      }
    }
  if (o.pass)
    o.detail = "r <= 4, n <= 5";
  return o;
}

// 6
outcome reduction_maps() {
  outcome o;
  std::uint64_t cases = 0;
  for (int r = 2; r <= exhaustive_r_max; ++r)
    for (int n = 1; n <= exhaustive_n_max; ++n)
      for (const auto &x : enumerate(group_params(r, n)))
        for (int c = 0; c < r; ++c)
          for (int d = c + 1; d < r; ++d) {
            const int here = count_color_pair(x, c, d);
            const int first = x.colors()[0];
            int expected = 0;
            if (first != c)
              expected = count_color_pair(drop_first(x), c, d);
            else if (n == 1)
              expected = 0;
            else if (x.colors()[1] == c)
              expected = count_color_pair(drop_first(x), c, d);
            else if (x.colors()[1] == d)
              expected = 1 + count_color_pair(drop_first_two(x), c, d);
            else
              expected = count_color_pair(drop_first_two(x), c, d);
            ++cases;
            if (here != expected)
              o.fail("case table fails on " + to_string(x));
          }
  if (o.pass)
    o.detail = std::to_string(cases) + " (element, c, d) cases";
  return o;
}

// 7
outcome erratum() {
  outcome o;
  const auto two = run_erratum(2, 6, {});
  for (const auto &row : two.rows)
    if (!row.formula_agrees || !row.series_agrees || !row.brute ||
        *row.brute != row.truth)
      o.fail("r=2 disagreement at n=" + std::to_string(row.n));

  const auto three = run_erratum(3, 2, {});
  if (three.rows.size() != 3 || three.rows[1].formula[0] != 2 ||
      three.rows[1].truth.coefficient(0) != 3 || three.rows[2].formula[0] != 5 ||
      three.rows[2].truth.coefficient(0) != 17)
    o.fail("r=3 recorded values changed");
  const auto *zero =
      three.rows.empty() ? nullptr
                         : std::get_if<non_polynomial_coefficient>(&three.rows[0].series);
  if (zero == nullptr ||
      zero->value != qrational_function(qpolynomial{-1, 1}, qpolynomial{0, 1}))
    o.fail("r=3 n=0 series is not reported as (q-1)/q");
  const auto text = format_text(three);
  for (const char *needle : {"m=0: 2 vs 3", "m=0: 5 vs 17", "(-1 + q)/(q)"})
    if (text.find(needle) == std::string::npos)
      o.fail(std::string("report lacks '") + needle + "'");

  const std::filesystem::path dir(GOLDEN_DIR);
  if (text != slurp(dir / "erratum_r3_n2.txt"))
    o.fail("r=3 report differs from the golden file");
  if (format_text(two) != slurp(dir / "erratum_r2_n6.txt"))
    o.fail("r=2 report differs from the golden file");
  if (o.pass)
    o.detail = "r=2 n<=6 agree; r=3 recorded; golden files match";
  return o;
}

// 8
outcome determinism() {
  outcome o;
  const std::vector<std::string> commands{
      "verify --r-max 4 --n-max 5",
      "verify --r-max 3 --n-max 4 --format json",
      "dist --r 4 --n 6 --stat des-cc --c 1",
      "dist --r 3 --n 7 --stat des-cd --c 0 --d 2",
      "dist --r 2 --n 8 --stat pdes --format csv",
  };
  for (const auto &command : commands) {
    const auto first = run_cdes(command + " --jobs 1");
    const auto again = run_cdes(command + " --jobs 1");
    const auto parallel = run_cdes(command + " --jobs 4");
    if (first.first != 0 || first.second.empty())
      o.fail("'" + command + "' did not run");
    else if (first.second != again.second)
      o.fail("'" + command + "' differs between runs");
    else if (first.second != parallel.second)
      o.fail("'" + command + "' differs between --jobs 1 and --jobs 4");
  }
  if (o.pass)
    o.detail = std::to_string(commands.size()) + " commands byte-identical";
  return o;
}

// 9
outcome integrality() {
  outcome o;
  std::size_t checked = 0;
  const auto expect = [&](const qpolynomial &poly, const std::string &what) {
    ++checked;
    if (!poly.has_integer_coefficients())
      o.fail(what);
  };
  const int n_max = integrality_n_max;
  try {
    const auto p = expand_P(n_max);
    for (int n = 0; n <= n_max; ++n) {
      expect(p.total[n], "P at n=" + std::to_string(n));
      expect(p.plus[n], "P+ at n=" + std::to_string(n));
      expect(p.minus[n], "P- at n=" + std::to_string(n));
    }
    for (const auto &poly : p_power_sum(n_max))
      expect(poly, "power-sum route");
    for (int r = 2; r <= integrality_r_max; ++r)
      for (const auto &poly : expand_A(r, n_max))
        expect(poly, "A series at r=" + std::to_string(r));
    const auto g = expand_G(2, n_max);
    for (const auto *seq : {&g.total, &g.plus, &g.minus})
      for (const auto &outcome : *seq) {
        if (const auto *poly = std::get_if<qpolynomial>(&outcome))
          expect(*poly, "G series at r=2");
        else
          o.fail("G series at r=2 has a non-polynomial coefficient");
      }
  } catch (const std::exception &e) {
    o.fail(e.what());
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " coefficients";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<outcome()>>> criteria{
      {"cross-method matrix", cross_method_matrix},
      {"spot values", spot_values},
      {"normalization at q=1", normalization},
      {"r=2 binomial identity", identity_r2_timed},
      {"bijection and symmetry", bijection_symmetry},
      {"reduction maps", reduction_maps},
      {"(c,c) report", erratum},
      {"determinism", determinism},
      {"integrality", integrality},
  };
  int failures = 0;
  int index = 0;
  for (const auto &[name, check] : criteria) {
    ++index;
    outcome result;
    try {
      result = check();
    } catch (const std::exception &e) {
      result.fail(std::string("exception: ") + e.what());
    }
    failures += result.pass ? 0 : 1;
    std::cout << "[" << (result.pass ? "PASS" : "FAIL") << "] " << index << ". "
              << name << ": " << result.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass"
                              : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
