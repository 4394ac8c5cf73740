#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "fockh/suites.hpp"

using namespace fockh;

TEST_CASE("suite and sweep registries") {
  const auto& sn = suites::suite_names();
  CHECK(sn.size() == 8);
  for (const char* name : {"kernel", "mittag-leffler", "reproduce",
                           "hankel-hs", "gamma-sum", "chernoff", "i-integral",
                           "g-factors"}) {
    CHECK(std::find(sn.begin(), sn.end(), name) != sn.end());
  }
  const auto& sw = suites::sweep_names();
  CHECK(sw.size() == 8);
  for (const char* name :
       {"hs-vs-symbol", "gamma-sum-ratio", "g0-estimate", "g1-estimate",
        "i-estimate", "kernel-pointwise", "diagonal-exponent", "boundedness"}) {
    CHECK(std::find(sw.begin(), sw.end(), name) != sw.end());
  }
  CHECK_THROWS_AS(suites::run_suite("nope", suites::Defaults{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(suites::make_sweep("nope", suites::Defaults{}),
                  std::invalid_argument);
}

TEST_CASE("sweeps are deterministic for a fixed seed") {
  suites::Defaults d;
  d.m_max = 200;
  const auto a = suites::make_sweep("gamma-sum-ratio", d);
  const auto b = suites::make_sweep("gamma-sum-ratio", d);
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_json() == b.to_json());

  suites::Defaults e;
  e.seed = 777;
  const auto c1 = suites::make_sweep("boundedness", e);
  const auto c2 = suites::make_sweep("boundedness", e);
  CHECK(c1.to_csv() == c2.to_csv());
}

TEST_CASE("fast suites pass with the pinned defaults") {
  const suites::Defaults d;
  for (const char* name : {"chernoff", "gamma-sum"}) {
    const auto r = suites::run_suite(name, d);
    CHECK(r.suite == name);
    CHECK(r.passed());
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.pass);
    }
  }
}
