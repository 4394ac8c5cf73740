#include <doctest.h>

#include <cmath>

#include "fockh/highprec.hpp"
#include "fockh/specfun.hpp"

using namespace fockh;
using doctest::Approx;

TEST_CASE("ml_negative_axis frozen oracle") {
  // E_{1/2,1/2}(-5) * 5 = 0.05333197441206577548510.
  CHECK(highprec::ml_negative_axis(2, 5.0) ==
        Approx(0.05333197441206577548510 / 5.0).epsilon(1e-12));
  CHECK(highprec::ml_negative_axis(2, 0.0) ==
        Approx(1.0 / std::tgamma(0.5)).epsilon(1e-13));
}

TEST_CASE("log_abs_ml agrees with the positive-axis log evaluator") {
  // ln E_{1/3,1/3}(8) = 517.25749537202778154790.
  CHECK(highprec::log_abs_ml(3, {8.0, 0.0}) ==
        Approx(517.25749537202778154790).epsilon(1e-12));
  CHECK(highprec::log_abs_ml(2, {3.0, 0.0}) ==
        Approx(specfun::log_mittag_leffler_positive(2, 3.0)).epsilon(1e-12));
}

TEST_CASE("log_abs_ml agrees with the double series at modest arguments") {
  const std::complex<double> lam{1.3, 0.4};
  const auto ml = specfun::mittag_leffler(2, lam);
  CHECK(highprec::log_abs_ml(2, lam) ==
        Approx(std::log(std::abs(ml.value))).epsilon(1e-11));
}

TEST_CASE("asymptotic gap decays like 1/t^2") {
  // |E(t) - ell t^(ell-1) e^(t^ell)| ~ t^(-2)/|Gamma(-1/ell)| for large t.
  for (int ell : {2, 3}) {
    const double g6 = std::abs(highprec::ml_asymptotic_gap(ell, 6.0));
    const double g12 = std::abs(highprec::ml_asymptotic_gap(ell, 12.0));
    CHECK(g6 > g12);
    CHECK(g12 * 12.0 < 1.0);
  }
}
