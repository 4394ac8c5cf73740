#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fockh/estimates.hpp"
#include "fockh/fock.hpp"
#include "fockh/quad.hpp"
#include "fockh/specfun.hpp"

using namespace fockh;
using doctest::Approx;

TEST_CASE("gamma_sum: ell=1 collapse to the binomial theorem") {
  // S(m) = sum_k m!/(k!(m-k)!) = 2^m.
  for (std::size_t m : {1u, 2u, 10u, 50u, 200u, 1000u}) {
    CHECK(estimates::gamma_sum(m, 1) ==
          Approx(static_cast<double>(m) * std::log(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("gamma_sum frozen oracle at ell=3") {
  CHECK(estimates::gamma_sum(100, 3) ==
        Approx(23.2793220665868119729951).epsilon(1e-12));
}

TEST_CASE("gamma_sum_decomposed recombines to the total") {
  for (int ell : {2, 3, 4}) {
    for (std::size_t m : {static_cast<std::size_t>(16 * ell),
                          static_cast<std::size_t>(40 * ell + 1)}) {
      const auto d = estimates::gamma_sum_decomposed(m, ell);
      CHECK(d.m == m);
      CHECK(d.ell == ell);
      std::vector<double> parts(d.parts, d.parts + 5);
      double mx = *std::max_element(parts.begin(), parts.end());
      double acc = 0.0;
      for (double lp : parts) acc += std::exp(lp - mx);
      CHECK(mx + std::log(acc) ==
            Approx(estimates::gamma_sum(m, ell)).epsilon(1e-10));
      CHECK(d.total == Approx(estimates::gamma_sum(m, ell)).epsilon(1e-12));
      CHECK(d.ratio_to_2_pow ==
            Approx(std::exp(d.total -
                            static_cast<double>(m) / ell * std::log(2.0)))
                .epsilon(1e-10));
      CHECK(d.s4_dominates);
    }
  }
}

TEST_CASE("chernoff_check exact small cases") {
  // n = 4: sum_{i<=1} C(4,i) = 5 <= 16 e^{-1/2} = 9.70.
  const auto c4 = estimates::chernoff_check(4);
  CHECK(c4.lhs == 5);
  CHECK(c4.rhs == Approx(16.0 * std::exp(-0.5)).epsilon(1e-14));
  CHECK(c4.holds);
  // n = 8: sum_{i<=2} C(8,i) = 1 + 8 + 28 = 37 <= 256 e^{-1} = 94.17.
  const auto c8 = estimates::chernoff_check(8);
  CHECK(c8.lhs == 37);
  CHECK(c8.holds);
}

TEST_CASE("log_j_series frozen oracle and ell=1 closed form") {
  CHECK(estimates::log_j_series(2, 0.5, 1.0, 1.0, 1.7) ==
        Approx(2.3802675238406914953456).epsilon(1e-12));
  // ell = 1, a = 1/2, b = 1, c = 0: J = pi e^{|z|^2/4}; at |z| = 2 that is
  // ln pi + 1.
  CHECK(estimates::log_j_series(1, 0.5, 1.0, 0.0, 2.0) ==
        Approx(std::log(kPi) + 1.0).epsilon(1e-12));
}

TEST_CASE("log_j_quadrature agrees with the series") {
  quad::QuadratureSpec q{192, 96, 7.0};
  for (double zm : {0.0, 0.8, 2.1}) {
    const double s = estimates::log_j_series(2, 0.5, 1.0, 2.0, zm);
    const double g = estimates::log_j_quadrature(2, 0.5, 1.0, 2.0, zm, q);
    CHECK(g == Approx(s).epsilon(1e-8));
  }
}

TEST_CASE("log_i_integral_series is the log-sum of the two J pieces") {
  const double j0 = estimates::log_j_series(2, 0.5, 1.0, 0.0, 1.3);
  const double jc = estimates::log_j_series(2, 0.5, 1.0, 2.0, 1.3);
  const double want = std::log(std::exp(j0) + std::exp(jc));
  CHECK(estimates::log_i_integral_series(2, 0.5, 1.0, 2.0, 1.3) ==
        Approx(want).epsilon(1e-12));
}

TEST_CASE("square_completion is an identity") {
  for (int ell : {1, 2, 3}) {
    const Complex z{1.3, -0.4}, w{0.7, 0.9};
    const auto s = estimates::square_completion(z, w, ell);
    CHECK(s.lhs == Approx(s.rhs).epsilon(1e-12));
  }
}

TEST_CASE("g_factor_norm: G0 sup norm is exactly e^{|z|^{2 ell}/8}") {
  quad::QuadratureSpec q{192, 96, 8.0};
  for (int ell : {1, 2}) {
    for (double zm : {0.5, 1.5}) {
      const double got = estimates::g_factor_norm(
          Complex{zm, 0.0}, ell, FockParams::kPInfinity,
          estimates::GFactor::G0, q);
      const double want = std::exp(std::pow(zm, 2.0 * ell) / 8.0);
      CHECK(got == Approx(want).epsilon(1e-8));
    }
  }
}

TEST_CASE("g_factor_norm: G0 at ell=1, p=2 is sqrt(pi) e^{|z|^2/8}") {
  quad::QuadratureSpec q{192, 96, 8.0};
  const double zm = 1.2;
  const double got = estimates::g_factor_norm(Complex{zm, 0.0}, 1, 2.0,
                                              estimates::GFactor::G0, q);
  CHECK(got == Approx(std::sqrt(kPi) * std::exp(zm * zm / 8.0)).epsilon(1e-8));
}

TEST_CASE("G0 * G1 factors the kernel pointwise") {
  const FockParams fp{1.0, 2, 2.0};
  const Complex z{0.9, 0.4}, w{0.5, -0.7};
  auto ipow = [](Complex x, int n) {
    Complex acc{1.0, 0.0};
    for (int i = 0; i < n; ++i) acc *= x;
    return acc;
  };
  const Complex g0 = std::exp(ipow(std::conj(z) * w, 2) / 2.0);
  const Complex g1 = std::exp(-ipow(std::conj(z) * w, 2) / 2.0) *
                     fock::kernel_eval(w, z, fp).value;
  const Complex k = fock::kernel_eval(w, z, fp).value;
  CHECK(std::abs(g0 * g1 - k) <= 1e-13 * std::abs(k));
}
