#include "fockh/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace fockh::report {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void RatioReport::add(std::string grid_point, double computed, double comparator) {
  if (!(computed > 0.0) || !(comparator > 0.0))
    throw std::runtime_error("RatioReport: nonpositive value at " + grid_point);
  add_log(std::move(grid_point), std::log(computed), std::log(comparator));
}

void RatioReport::add_log(std::string grid_point, double log_computed,
                          double log_comparator) {
  samples.push_back({std::move(grid_point), log_computed, log_comparator,
                     log_computed - log_comparator});
}

void RatioReport::finalize() {
  if (samples.empty()) throw std::runtime_error("RatioReport: no samples");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (const Sample& s : samples) {
    if (std::isnan(s.log_ratio))
      throw std::runtime_error("RatioReport: NaN ratio at " + s.grid_point);
    lo = std::min(lo, s.log_ratio);
    hi = std::max(hi, s.log_ratio);
    acc += s.log_ratio;
  }
  min_log_ratio = lo;
  max_log_ratio = hi;
  mean_log_ratio = acc / static_cast<double>(samples.size());
}

std::string RatioReport::to_csv() const {
  std::string out = "grid_point,log_computed,log_comparator,log_ratio\n";
  for (const Sample& s : samples) {
    out += s.grid_point;
    out += ',';
    out += fmt(s.log_computed);
    out += ',';
    out += fmt(s.log_comparator);
    out += ',';
    out += fmt(s.log_ratio);
    out += '\n';
  }
  return out;
}

std::string RatioReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["quantity"] = quantity;
  j["params"] = params;
  j["min_log_ratio"] = min_log_ratio;
  j["max_log_ratio"] = max_log_ratio;
  j["mean_log_ratio"] = mean_log_ratio;
  auto arr = nlohmann::ordered_json::array();
  for (const Sample& s : samples) {
    arr.push_back({{"grid_point", s.grid_point},
                   {"log_computed", s.log_computed},
                   {"log_comparator", s.log_comparator},
                   {"log_ratio", s.log_ratio}});
  }
  j["samples"] = std::move(arr);
  return j.dump(2) + "\n";
}

void write_report(const RatioReport& r, const std::string& dir,
                  const std::string& stem) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base = std::filesystem::path(dir) / stem;
  {
    std::ofstream f(base.string() + ".csv", std::ios::binary);
    f << r.to_csv();
  }
  {
    std::ofstream f(base.string() + ".json", std::ios::binary);
    f << r.to_json();
  }
}

}  // namespace fockh::report
