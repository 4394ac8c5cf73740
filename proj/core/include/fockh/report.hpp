#ifndef FOCKH_REPORT_HPP
#define FOCKH_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace fockh::report {

inline constexpr const char* kSchemaVersion = "fockh-report-1";

/// One sweep record: a computed quantity against its comparator on a
/// parameter grid.  The evidence format behind every two-sided estimate.
struct RatioReport {
  std::string quantity;
  std::map<std::string, std::string> params;

  /// Values are carried in natural-log scale: the quantities swept here
  /// reach e^(+-1700) and beyond, far outside linear double range.
  struct Sample {
    std::string grid_point;  // "ell=2;m=16"
    double log_computed = 0.0;
    double log_comparator = 0.0;
    double log_ratio = 0.0;
  };
  std::vector<Sample> samples;

  double min_log_ratio = 0.0;
  double max_log_ratio = 0.0;
  double mean_log_ratio = 0.0;

  void add(std::string grid_point, double computed, double comparator);
  void add_log(std::string grid_point, double log_computed, double log_comparator);

  /// Fill the log-ratio extremes and mean; throws on NaN ratios.
  void finalize();

  std::string to_csv() const;
  std::string to_json() const;
};

/// Writes both report flavours next to each other:
/// <dir>/<stem>.csv and <dir>/<stem>.json.
void write_report(const RatioReport& r, const std::string& dir,
                  const std::string& stem);

}  // namespace fockh::report

#endif  // FOCKH_REPORT_HPP
