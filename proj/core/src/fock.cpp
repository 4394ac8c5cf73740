#include "fockh/fock.hpp"

#include <algorithm>
#include <cmath>

#include "fockh/specfun.hpp"

namespace fockh {

TaylorSymbol multiply(const TaylorSymbol& f, const TaylorSymbol& g) {
  if (f.is_zero() || g.is_zero()) return TaylorSymbol{};
  std::vector<Complex> out(f.coeffs.size() + g.coeffs.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs.size(); ++j)
      out[i + j] += f.coeffs[i] * g.coeffs[j];
  return TaylorSymbol(std::move(out));
}

namespace fock {

double log_monomial_norm_sq(std::size_t m, const FockParams& fp) {
  fp.validate();
  const double mm = static_cast<double>(m);
  const double arg = (mm + 1.0) / fp.ell;
  return std::log(kPi / fp.ell) - arg * std::log(fp.alpha) + specfun::log_gamma(arg);
}

double monomial_norm_sq(std::size_t m, const FockParams& fp) {
  const double lg = log_monomial_norm_sq(m, fp);
  if (lg > 709.0)
    throw OverflowError("monomial_norm_sq: value exceeds double range; use log variant");
  return std::exp(lg);
}

KernelValue kernel_eval(Complex z, Complex w, const FockParams& fp,
                        const SeriesControl& ctl) {
  fp.validate();
  const double a_root = std::pow(fp.alpha, 1.0 / fp.ell);
  const Complex lambda = a_root * z * std::conj(w);
  const auto e = specfun::mittag_leffler(fp.ell, lambda, ctl);
  return {fp.ell * a_root / kPi * e.value,
          e.branch == specfun::MlBranch::Asymptotic, e.noisy};
}

double log_kernel_diag(double abs_w, const FockParams& fp) {
  fp.validate();
  const double a_root = std::pow(fp.alpha, 1.0 / fp.ell);
  const double x = a_root * abs_w * abs_w;
  return std::log(fp.ell * a_root / kPi) +
         specfun::log_mittag_leffler_positive(fp.ell, x);
}

TaylorSymbol dilate(const TaylorSymbol& f, double lambda, const FockParams& fp,
                    bool normalized) {
  fp.validate();
  if (!(lambda > 0.0)) throw std::domain_error("dilate: lambda <= 0");
  const double step = std::pow(lambda, 1.0 / (2.0 * fp.ell));
  double factor = 1.0;
  if (normalized) {
    if (fp.p == FockParams::kPInfinity)
      factor = 1.0;  // lambda^(1/(p ell)) -> 1 as p -> infinity
    else
      factor = std::pow(lambda, 1.0 / (fp.p * fp.ell));
  }
  std::vector<Complex> out(f.coeffs.size());
  double pw = factor;
  for (std::size_t m = 0; m < f.coeffs.size(); ++m) {
    out[m] = f.coeffs[m] * pw;
    pw *= step;
  }
  return TaylorSymbol(std::move(out));
}

namespace {

// Golden-section maximization of a unimodal-ish 1-D slice.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters = 80) {
  constexpr double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

PolarMax maximize_polar(const std::function<double(double, double)>& log_f,
                        double r_max, std::size_t n_radial, std::size_t n_angular) {
  if (!(r_max > 0.0)) throw std::domain_error("maximize_polar: r_max <= 0");
  double best = -std::numeric_limits<double>::infinity();
  double best_r = 0.0, best_th = 0.0;
  for (std::size_t i = 0; i <= n_radial; ++i) {
    const double r = r_max * static_cast<double>(i) / static_cast<double>(n_radial);
    for (std::size_t j = 0; j < n_angular; ++j) {
      const double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_angular);
      const double v = log_f(r, th);
      if (v > best) {
        best = v;
        best_r = r;
        best_th = th;
      }
    }
  }
  // Alternating 1-D refinements around the best grid cell.
  const double dr = r_max / static_cast<double>(n_radial);
  const double dth = 2.0 * kPi / static_cast<double>(n_angular);
  double r = best_r, th = best_th;
  for (int round = 0; round < 3; ++round) {
    th = golden_max([&](double t) { return log_f(r, t); }, th - dth, th + dth);
    r = golden_max([&](double rr) { return log_f(rr, th); },
                   std::max(0.0, r - dr), std::min(r_max, r + dr));
  }
  const double refined = log_f(r, th);
  if (refined > best) {
    best = refined;
    best_r = r;
    best_th = th;
  }
  return {best, best_r, best_th, best_r >= r_max * (1.0 - 1e-9)};
}

SupResult sup_norm_weighted(const TaylorSymbol& b, double beta, int ell,
                            std::size_t n_radial, std::size_t n_angular,
                            double r_max) {
  if (!(beta > 0.0)) throw std::domain_error("sup_norm_weighted: beta <= 0");
  if (ell < 1) throw std::domain_error("sup_norm_weighted: ell < 1");
  if (b.is_zero()) return {0.0, 0.0, false};
  if (r_max <= 0.0) {
    // For b = z^m the maximizer sits at r^(2 ell) = m/(beta ell);
    // cover the top-degree maximizer with margin.
    const double d = static_cast<double>(b.degree());
    r_max = std::pow((d + 1.0) / (beta * ell), 1.0 / (2.0 * ell)) + 2.0;
  }
  auto log_f = [&](double r, double th) {
    const Complex z = std::polar(r, th);
    const double mod = std::abs(b.eval(z));
    const double weight = -0.5 * beta * std::pow(r, 2.0 * ell);
    if (mod == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(mod) + weight;
  };
  const PolarMax m = maximize_polar(log_f, r_max, n_radial, n_angular);
  return {std::exp(m.log_value), m.r, m.boundary};
}

}  // namespace fock
}  // namespace fockh
