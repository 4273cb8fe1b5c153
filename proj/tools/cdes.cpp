// cdes: distributions of colored descent statistics on G_{r,n}.
//
// Exit codes: 0 success, 1 identity/verification failure, 2 usage error,
// 3 enumeration budget refusal.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coldes/errors.hpp"
#include "coldes/harness.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

constexpr const char *method_matrix = R"(Methods by statistic:
  brute       all statistics (exhaustive enumeration)
  formula     pdes/ndes: triple-sum closed form; pndes: n! C(n+1,n-2m);
              des-cd: alternating single sum; des-cc: closed triple sum
              (known to be wrong for r != 2; fails with exit 1 when it does
              not produce valid counts)
  blocks      pndes, des-cd: sum over colored compositions
  recurrence  pdes/ndes: p_n; pndes, des-cd: A_{r,n}; des-cc: g_{r,n}
  series      pdes/ndes: P(x,q); pndes, des-cd: 1/(1-rx-(q-1)x^2);
              des-cc: G_r(x,q) (exit 1 when a coefficient is not a polynomial)
  pndes is des-cd with c=0, d=1 at r=2, so it follows the des-cd routes.)";

unsigned default_jobs() {
  if (const char *env = std::getenv("CDES_JOBS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0)
        return static_cast<unsigned>(value);
    } catch (const std::exception &) {
    }
  }
  return 1;
}

// Writes through a temporary file in the same directory, then renames.
void write_atomically(const std::string &path, const std::string &content) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot open " + temp.string() + " for writing");
    out << content;
    if (!out.flush())
      throw std::runtime_error("failed writing " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

void emit(const std::string &content, const std::string &out_path) {
  if (out_path.empty())
    std::cout << content << std::flush;
  else
    write_atomically(out_path, content);
}

struct dist_flags {
  int r = 0;
  int n = 0;
  std::string stat;
  std::optional<int> c;
  std::optional<int> d;
  std::string method = "brute";
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
  std::uint64_t cap = 100'000'000;
};

coldes::descent_statistic make_statistic(const dist_flags &f) {
  using coldes::descent_statistic;
  if (f.stat == "pdes" || f.stat == "ndes" || f.stat == "pndes") {
    if (f.c || f.d)
      throw CLI::ValidationError("--c/--d are not used with --stat " + f.stat);
    if (f.stat == "pdes")
      return descent_statistic::pdes();
    if (f.stat == "ndes")
      return descent_statistic::ndes();
    return descent_statistic::pndes();
  }
  if (f.stat == "des-cd") {
    if (!f.c || !f.d)
      throw CLI::ValidationError("--stat des-cd needs both --c and --d");
    return descent_statistic::des_cd(*f.c, *f.d);
  }
  if (!f.c)
    throw CLI::ValidationError("--stat des-cc needs --c");
  if (f.d && *f.d != *f.c)
    throw CLI::ValidationError("--stat des-cc takes --d only equal to --c");
  return descent_statistic::des_cc(*f.c);
}

int run_dist(const dist_flags &f) {
  const coldes::group_params params(f.r, f.n);
  const auto stat = make_statistic(f);
  const auto how = coldes::parse_method(f.method);
  const auto dist = coldes::compute_distribution(params, stat, how,
                                                 {f.jobs, f.cap});
  emit(f.format == "csv" ? coldes::to_csv(dist) : coldes::to_json(dist) + "\n",
       f.out);
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact distributions of colored descent statistics on the "
               "colored permutation groups G_{r,n}"};
  app.require_subcommand(1);
  app.footer(method_matrix);

  dist_flags dist;
  dist.jobs = default_jobs();
  auto *dist_cmd = app.add_subcommand("dist", "Compute one distribution");
  dist_cmd->add_option("--r", dist.r, "Number of colors")
      ->required()
      ->check(CLI::PositiveNumber);
  dist_cmd->add_option("--n", dist.n, "Number of letters")
      ->required()
      ->check(CLI::NonNegativeNumber);
  dist_cmd->add_option("--stat", dist.stat, "Statistic")
      ->required()
      ->check(CLI::IsMember({"pdes", "ndes", "pndes", "des-cd", "des-cc"}));
  dist_cmd->add_option("--c", dist.c, "Left color")->check(CLI::NonNegativeNumber);
  dist_cmd->add_option("--d", dist.d, "Right color")->check(CLI::NonNegativeNumber);
  dist_cmd->add_option("--method", dist.method, "Computation method")
      ->check(CLI::IsMember({"brute", "formula", "blocks", "recurrence", "series"}))
      ->capture_default_str();
  dist_cmd->add_option("--format", dist.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  dist_cmd->add_option("--out", dist.out, "Write to FILE instead of stdout");
  dist_cmd->add_option("--jobs", dist.jobs, "Worker threads for brute force "
                                            "(default: $CDES_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  dist_cmd->add_option("--cap", dist.cap, "Largest group to enumerate")
      ->capture_default_str();

  int verify_r_max = 4;
  int verify_n_max = 5;
  unsigned verify_jobs = default_jobs();
  std::uint64_t verify_cap = 100'000'000;
  std::string verify_format = "text";
  std::string verify_out;
  auto *verify_cmd =
      app.add_subcommand("verify", "Cross-check every method against "
                                   "enumeration for r <= r-max, n <= n-max");
  verify_cmd->add_option("--r-max", verify_r_max)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n-max", verify_n_max)
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--jobs", verify_jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--cap", verify_cap)->capture_default_str();
  verify_cmd->add_option("--format", verify_format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "Write to FILE instead of stdout");

  int identity_n_max = 40;
  auto *identity_cmd = app.add_subcommand(
      "identity", "Check the r = 2 binomial identity for all n <= n-max");
  identity_cmd->add_option("--n-max", identity_n_max)
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  int erratum_r = 3;
  int erratum_n_max = 4;
  unsigned erratum_jobs = default_jobs();
  std::uint64_t erratum_cap = 100'000'000;
  std::string erratum_out;
  auto *erratum_cmd = app.add_subcommand(
      "erratum", "Compare the (c,c)-descent closed formula and the G_r "
                 "series with the true counts");
  erratum_cmd->add_option("--r", erratum_r)
      ->required()
      ->check(CLI::PositiveNumber);
  erratum_cmd->add_option("--n-max", erratum_n_max)
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  erratum_cmd->add_option("--jobs", erratum_jobs)->check(CLI::PositiveNumber);
  erratum_cmd->add_option("--cap", erratum_cap)->capture_default_str();
  erratum_cmd->add_option("--out", erratum_out, "Write to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*dist_cmd)
      return run_dist(dist);

    if (*verify_cmd) {
      const auto report = coldes::run_verify(verify_r_max, verify_n_max,
                                             {verify_jobs, verify_cap});
      emit(verify_format == "json" ? coldes::format_json(report)
                                   : coldes::format_text(report),
           verify_out);
      return report.all_expected_agree() ? exit_ok : exit_failure;
    }

    if (*identity_cmd) {
      for (const auto &row : coldes::run_identity(identity_n_max)) {
        std::cout << "n=" << row.n << " m=" << row.m
                  << " lhs=" << row.lhs.get_str() << " rhs=" << row.rhs.get_str()
                  << (row.holds ? " ok" : " FAILED") << "\n";
        if (!row.holds) {
          std::cerr << "identity fails at n=" << row.n << ", m=" << row.m
                    << "\n";
          return exit_failure;
        }
      }
      std::cout << "identity holds for all n <= " << identity_n_max << "\n";
      return exit_ok;
    }

    if (*erratum_cmd) {
      const auto report = coldes::run_erratum(erratum_r, erratum_n_max,
                                              {erratum_jobs, erratum_cap});
      emit(coldes::format_text(report), erratum_out);
      return exit_ok;
    }
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const coldes::budget_exceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const coldes::integrality_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  } catch (const std::domain_error &e) {
    // Invalid statistic for r, unavailable method, bad parameters.
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}
