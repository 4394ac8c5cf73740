#include <doctest.h>

#include <cmath>

#include "fockh/fock.hpp"
#include "fockh/quad.hpp"

using namespace fockh;
using doctest::Approx;

TEST_CASE("radial rules integrate Gaussian moments") {
  // integral over C of |z|^(2m) e^(-|z|^2) = pi m!
  for (auto rule : {quad::RadialRule::GaussLegendre,
                    quad::RadialRule::GaussLaguerreTransformed}) {
    quad::QuadratureSpec q{96, 32, 9.0, rule};
    for (std::size_t m : {0u, 1u, 4u}) {
      const Complex got = quad::integrate(q, [m](Complex z) {
        const double r2 = std::norm(z);
        return Complex{std::pow(r2, static_cast<double>(m)) * std::exp(-r2),
                       0.0};
      });
      const double want = kPi * std::tgamma(static_cast<double>(m) + 1.0);
      CHECK(got.real() == Approx(want).epsilon(1e-8));
      CHECK(std::abs(got.imag()) <= 1e-12 * want);
    }
  }
}

TEST_CASE("integrate_log agrees with integrate on a positive integrand") {
  quad::QuadratureSpec q{64, 32, 8.0};
  const double lin = quad::integrate(q, [](Complex z) {
                       return Complex{std::exp(-std::norm(z)), 0.0};
                     }).real();
  const double lg = quad::integrate_log(
      q, [](double r, double) { return -r * r; });
  CHECK(lg == Approx(std::log(lin)).epsilon(1e-12));
}

TEST_CASE("fock_p_norm at p=2 squares to the monomial norm") {
  const FockParams fp{1.0, 2, 2.0};
  quad::QuadratureSpec q{128, 32, quad::default_r_max(1.0, 2, 5)};
  const auto n = quad::fock_p_norm(TaylorSymbol::monomial(5), fp, q);
  CHECK_FALSE(n.tail_warning);
  CHECK(n.value * n.value ==
        Approx(fock::monomial_norm_sq(5, fp)).epsilon(1e-10));
  // ||z^5||^2 at (alpha=1, ell=2) is Gamma(3) pi/2 = pi.
  CHECK(n.value * n.value == Approx(kPi).epsilon(1e-10));
}

TEST_CASE("inner_product: monomial orthogonality and norms") {
  const FockParams fp{2.0, 3, 2.0};
  const TaylorSymbol f({{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}});  // z + 2i z^2
  const TaylorSymbol g({{0.0, 0.0}, {0.0, 1.0}});              // i z
  const Complex got = quad::inner_product(f, g, fp);
  // <f, g> = c1 * conj(i) * ||z||^2.
  const Complex want = Complex{1.0, 0.0} * Complex{0.0, -1.0} *
                       fock::monomial_norm_sq(1, fp);
  CHECK(std::abs(got - want) <= 1e-13 * std::abs(want));
}

TEST_CASE("bergman_project_mixed") {
  const FockParams fp{1.0, 1, 2.0};
  // j >= k: P(w^3 conj(w)^1) = (||w^3||^2/||w^2||^2) z^2 = 3 z^2 at ell=1.
  const TaylorSymbol s = quad::bergman_project_mixed(3, 1, fp);
  REQUIRE(s.degree() == 2);
  CHECK(std::abs(s.coeffs[2] - Complex{3.0, 0.0}) <= 1e-12);
  // j < k: annihilated.
  CHECK(quad::bergman_project_mixed(1, 3, fp).is_zero());
}

TEST_CASE("reproducing integral recovers z0^m") {
  const FockParams fp{1.0, 2, 2.0};
  const Complex z0{1.0, 0.5};
  quad::QuadratureSpec q{160, 512, quad::default_r_max(1.0, 2, 8)};
  const auto vals = quad::reproduce_check_upto(4, z0, fp, q);
  REQUIRE(vals.size() == 5);
  for (std::size_t m = 0; m <= 4; ++m) {
    const Complex want = m == 0 ? Complex{1.0, 0.0}
                                : std::pow(z0, static_cast<double>(m));
    CHECK(std::abs(vals[m] - want) <= 1e-8 * (1.0 + std::abs(want)));
    const Complex single = quad::reproduce_check(m, z0, fp, q);
    CHECK(std::abs(single - vals[m]) <= 1e-12 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("QuadratureSpec validation") {
  CHECK_THROWS_AS(quad::QuadratureSpec({4, 32, 8.0}).validate(),
                  std::domain_error);
  CHECK_THROWS_AS(quad::QuadratureSpec({64, 33, 8.0}).validate(),
                  std::domain_error);
  CHECK_THROWS_AS(quad::QuadratureSpec({64, 32, -1.0}).validate(),
                  std::domain_error);
}
