#ifndef FOCKH_SUITES_HPP
#define FOCKH_SUITES_HPP

#include <string>
#include <vector>

#include "fockh/report.hpp"

namespace fockh::suites {

/// The single versioned defaults table.  Every suite threshold lives
/// here; CLI overrides are echoed into the report header.
struct Defaults {
  static constexpr const char* kVersion = "fockh-defaults-1";

  double alpha = 1.0;
  int ell = 2;
  double p = 2.0;
  std::size_t m_max = 2000;
  std::size_t trunc = 64;
  double rel_tol = 1e-14;
  std::size_t grid_r = 160;
  std::size_t grid_theta = 128;
  double r_max = 0.0;  // 0 = per-task automatic choice
  unsigned seed = 12345;
  std::string out_dir = "reports";

  // Pass/fail thresholds (pinned; see the acceptance criteria).
  double tol_exact = 1e-12;
  double tol_series = 1e-10;
  double tol_quad = 1e-8;
  double tol_adjoint = 1e-9;
  double tol_series_vs_quad = 1e-6;
  double band_max = 100.0;      // max/min bracket for every "~" ratio
  double trend_max_log = 1.0;   // decile drift bound for flat log-ratios
  double decay_bound = 1.0;     // |E(-t)| * t ceiling on the negative axis
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  std::vector<report::RatioReport> reports;

  bool passed() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

const std::vector<std::string>& suite_names();  // excludes "all"
const std::vector<std::string>& sweep_names();

/// Runs one named suite.  Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const Defaults& d);

/// Builds one named sweep report.  Throws std::invalid_argument for
/// unknown names.
report::RatioReport make_sweep(const std::string& quantity, const Defaults& d);

/// Writes the suite summary (JSON) plus every attached ratio report
/// (CSV + JSON) into d.out_dir.
void write_suite_result(const SuiteResult& r, const Defaults& d);

}  // namespace fockh::suites

#endif  // FOCKH_SUITES_HPP
