#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fockh/report.hpp"

using namespace fockh;
using doctest::Approx;

TEST_CASE("add and add_log agree; finalize computes the extremes") {
  report::RatioReport a, b;
  a.quantity = b.quantity = "q";
  a.add("p=1", 2.0, 1.0);
  a.add("p=2", 1.0, 4.0);
  b.add_log("p=1", std::log(2.0), 0.0);
  b.add_log("p=2", 0.0, std::log(4.0));
  a.finalize();
  b.finalize();
  REQUIRE(a.samples.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a.samples[i].log_ratio == Approx(b.samples[i].log_ratio).epsilon(1e-15));
  }
  CHECK(a.max_log_ratio == Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(a.min_log_ratio == Approx(-std::log(4.0)).epsilon(1e-15));
  CHECK(a.mean_log_ratio ==
        Approx(0.5 * (std::log(2.0) - std::log(4.0))).epsilon(1e-15));
}

TEST_CASE("add rejects nonpositive values; finalize rejects NaN and empty") {
  report::RatioReport r;
  CHECK_THROWS_AS(r.add("p", -1.0, 1.0), std::runtime_error);
  CHECK_THROWS_AS(r.add("p", 1.0, 0.0), std::runtime_error);
  CHECK_THROWS_AS(r.finalize(), std::runtime_error);  // no samples
  report::RatioReport s;
  s.add_log("p", std::nan(""), 0.0);
  CHECK_THROWS_AS(s.finalize(), std::runtime_error);
}

TEST_CASE("CSV golden output") {
  report::RatioReport r;
  r.quantity = "demo";
  r.add_log("ell=2;m=16", 1.5, 1.0);
  r.finalize();
  CHECK(r.to_csv() ==
        "grid_point,log_computed,log_comparator,log_ratio\n"
        "ell=2;m=16,1.5,1,0.5\n");
}

TEST_CASE("JSON schema fields") {
  report::RatioReport r;
  r.quantity = "demo";
  r.params["alpha"] = "1";
  r.add_log("a", 2.0, 1.0);
  r.add_log("b", 1.0, 1.0);
  r.finalize();
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j.at("schema_version").get<std::string>() == report::kSchemaVersion);
  CHECK(j.at("quantity").get<std::string>() == "demo");
  CHECK(j.at("params").at("alpha").get<std::string>() == "1");
  CHECK(j.at("samples").size() == 2);
  CHECK(j.at("samples")[0].at("grid_point").get<std::string>() == "a");
  CHECK(j.at("samples")[0].at("log_ratio").get<double>() == Approx(1.0));
  CHECK(j.at("max_log_ratio").get<double>() == Approx(1.0));
  CHECK(j.at("min_log_ratio").get<double>() == Approx(0.0));
  CHECK(j.at("mean_log_ratio").get<double>() == Approx(0.5));
}

TEST_CASE("write_report emits both flavours") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fockh-report-test";
  fs::create_directories(dir);
  report::RatioReport r;
  r.quantity = "demo";
  r.add_log("a", 1.0, 1.0);
  r.finalize();
  report::write_report(r, dir.string(), "demo-stem");
  std::ifstream csv(dir / "demo-stem.csv");
  std::stringstream buf;
  buf << csv.rdbuf();
  CHECK(buf.str() == r.to_csv());
  std::ifstream js(dir / "demo-stem.json");
  CHECK(js.good());
  fs::remove_all(dir);
}
