#include <algorithm>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockh/suites.hpp"

namespace {

void add_common_flags(CLI::App* app, fockh::suites::Defaults& d) {
  app->add_option("--alpha", d.alpha, "weight parameter alpha > 0");
  app->add_option("--ell", d.ell, "integer weight exponent ell >= 1");
  app->add_option("--p", d.p, "integrability exponent (0 = infinity)");
  app->add_option("--m-max", d.m_max, "largest symbol degree in sweeps");
  app->add_option("--trunc", d.trunc, "matrix truncation order");
  app->add_option("--rel-tol", d.rel_tol, "series relative tolerance");
  app->add_option("--grid-r", d.grid_r, "radial quadrature nodes");
  app->add_option("--grid-theta", d.grid_theta, "angular quadrature nodes");
  app->add_option("--r-max", d.r_max, "radial cutoff (0 = automatic)");
  app->add_option("--seed", d.seed, "RNG seed for randomized checks");
  app->add_option("--out-dir", d.out_dir, "report output directory");
}

int run_one_suite(const std::string& name, const fockh::suites::Defaults& d) {
  const auto r = fockh::suites::run_suite(name, d);
  fockh::suites::write_suite_result(r, d);
  for (const auto& c : r.checks)
    std::printf("[%s] %-8s %s  (%s)\n", name.c_str(), c.pass ? "pass" : "FAIL",
                c.name.c_str(), c.detail.c_str());
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockh: verification suites and parameter sweeps"};
  app.require_subcommand(1);
  fockh::suites::Defaults d;

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "run a named verification suite");
  std::vector<std::string> suite_choices = fockh::suites::suite_names();
  suite_choices.push_back("all");
  suite->add_option("name", suite_name, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  add_common_flags(suite, d);

  std::string sweep_name;
  auto* sweep = app.add_subcommand("sweep", "emit a ratio sweep (CSV + JSON)");
  sweep->add_option("quantity", sweep_name, "sweep quantity")
      ->required()
      ->check(CLI::IsMember(fockh::suites::sweep_names()));
  add_common_flags(sweep, d);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (suite->parsed()) {
      if (suite_name == "all") {
        int worst = 0;
        for (const auto& n : fockh::suites::suite_names())
          worst = std::max(worst, run_one_suite(n, d));
        return worst;
      }
      return run_one_suite(suite_name, d);
    }
    const auto rep = fockh::suites::make_sweep(sweep_name, d);
    fockh::report::write_report(rep, d.out_dir, "sweep-" + sweep_name);
    std::printf("[%s] samples=%zu min_log=%.6g max_log=%.6g mean_log=%.6g\n",
                sweep_name.c_str(), rep.samples.size(), rep.min_log_ratio,
                rep.max_log_ratio, rep.mean_log_ratio);
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
