#include <doctest.h>

#include <cmath>
#include <random>

#include "fockh/fock.hpp"
#include "fockh/hankel.hpp"
#include "fockh/quad.hpp"

using namespace fockh;
using doctest::Approx;

TEST_CASE("hankel_matrix entries against frozen values") {
  // b = z^3, ell = 2, alpha = 1: entries (m,n) with m+n=3 only.
  const FockParams fp{1.0, 2, 2.0};
  const auto H = hankel::hankel_matrix(TaylorSymbol::monomial(3), fp, 6);
  REQUIRE(H.n == 6);
  CHECK(H.at(0, 3).real() == Approx(0.7511255444649424828587).epsilon(1e-13));
  CHECK(H.at(1, 2).real() == Approx(1.0622519320271969144771).epsilon(1e-13));
  CHECK(H.at(2, 1).real() == Approx(H.at(1, 2).real()).epsilon(1e-15));
  CHECK(std::abs(H.at(0, 0)) == 0.0);
  CHECK(std::abs(H.at(2, 2)) == 0.0);
}

TEST_CASE("hs_norm_sq_formula: classical monomial value 2^m m! at ell=1") {
  const FockParams fp{1.0, 1, 2.0};
  double want = 1.0;
  for (std::size_t m = 0; m <= 12; ++m) {
    CHECK(hankel::hs_norm_sq_formula(TaylorSymbol::monomial(m), fp) ==
          Approx(want).epsilon(1e-12));
    want *= 2.0 * static_cast<double>(m + 1);
  }
}

TEST_CASE("hs_norm_sq_formula frozen oracle at ell=3") {
  const FockParams fp{2.0, 3, 2.0};
  const TaylorSymbol b({{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.0}, {0.0, 0.0},
                        {1.0, 0.0}});  // 0.5 z + z^4
  CHECK(hankel::hs_norm_sq_formula(b, fp) ==
        Approx(1.3263884689458880478933).epsilon(1e-12));
  CHECK(hankel::log_hs_norm_sq_formula(b, fp) ==
        Approx(std::log(1.3263884689458880478933)).epsilon(1e-12));
}

TEST_CASE("truncated matrix Frobenius sum matches the closed formula") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> c(9);
    for (auto& x : c) x = Complex{u(rng), u(rng)};
    const TaylorSymbol b(std::move(c));
    const FockParams fp{1.0 + 0.3 * trial, 1 + trial % 3, 2.0};
    const auto t =
        hankel::hs_norm_sq_truncated(b, fp, 2 * b.degree() + 1);
    CHECK_FALSE(t.under_truncated);
    CHECK(t.value ==
          Approx(hankel::hs_norm_sq_formula(b, fp)).epsilon(1e-11));
  }
  // Too small a truncation is reported.
  CHECK(hankel::hs_norm_sq_truncated(TaylorSymbol::monomial(6),
                                     FockParams{1.0, 1, 2.0}, 6)
            .under_truncated);
}

TEST_CASE("truncated_operator_norm: rank structure of b=z^2 at ell=1") {
  // For b = z^2, ell=1, alpha=1 the antidiagonal entries are
  // ||w^2||^2/(||w^m|| ||w^n||), m+n=2, giving top singular value 2.
  const auto on = hankel::truncated_operator_norm(TaylorSymbol::monomial(2),
                                                  FockParams{1.0, 1, 2.0}, 40);
  CHECK(on.converged);
  CHECK(on.value == Approx(2.0).epsilon(1e-9));
}

TEST_CASE("adjoint identity <fg,b> = <g, conj(h_b f)>") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const FockParams fp{1.5, 2, 2.0};
  for (int trial = 0; trial < 20; ++trial) {
    auto rand_poly = [&](std::size_t deg) {
      std::vector<Complex> c(deg + 1);
      for (auto& x : c) x = Complex{u(rng), u(rng)};
      return TaylorSymbol(std::move(c));
    };
    const TaylorSymbol f = rand_poly(4), g = rand_poly(3), b = rand_poly(6);
    const Complex lhs = hankel::hankel_bilinear_form(f, g, b, fp);
    const TaylorSymbol hbf = hankel::hankel_apply_conj(b, f, fp);
    const Complex rhs = quad::inner_product(g, hbf, fp);
    CHECK(std::abs(lhs - rhs) <= 1e-11 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("symbol_delta_norm_sq: quadrature vs coefficient side at ell=1") {
  // At ell = 1 the weight (1+|z|)^0 drops and the integral collapses to the
  // plain beta-weighted L^2 norm: for beta = 1/2 the cross terms vanish by
  // angular orthogonality and int |z^m|^2 e^{-|z|^2/2} dA = 2 pi 2^m m!, so
  // the quadrature side is exactly 2 pi times the coefficient comparator.
  const TaylorSymbol b({{1.0, 0.0}, {0.0, 0.5}, {0.3, 0.0}});
  quad::QuadratureSpec q{192, 64, quad::default_r_max(0.5, 1, 4)};
  const auto d = hankel::symbol_delta_norm_sq(b, 0.5, 1, q);
  CHECK_FALSE(d.tail_warning);
  CHECK(d.quadrature ==
        Approx(2.0 * kPi * d.coefficient_side).epsilon(1e-9));
}

TEST_CASE("hs_norm_sq_L2: truncated unit symbol gives alpha R^2 at ell=1") {
  const FockParams fp{1.0, 1, 2.0};
  const double R = 3.0;
  hankel::RadialDensity phi;
  phi.poly = {1.0};
  phi.r_cut = R;
  quad::QuadratureSpec q{256, 16, R};  // r_max aligned with the cutoff
  const auto n = hankel::hs_norm_sq_L2(phi, fp, q);
  CHECK(n.value == Approx(fp.alpha * R * R).epsilon(1e-8));
}

TEST_CASE("RadialDensity eval") {
  hankel::RadialDensity d;
  d.poly = {1.0, 0.0, 2.0};
  d.gauss_coeff = 0.5;
  d.gauss_power = 2.0;
  d.r_cut = 2.0;
  CHECK(d.eval(1.0) == Approx(3.0 * std::exp(-0.5)).epsilon(1e-14));
  CHECK(d.eval(2.5) == 0.0);
}
