#include "fockh/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "fockh/estimates.hpp"
#include "fockh/fock.hpp"
#include "fockh/hankel.hpp"
#include "fockh/highprec.hpp"
#include "fockh/quad.hpp"
#include "fockh/report.hpp"
#include "fockh/specfun.hpp"

namespace fockh::suites {

namespace {

std::string fmt(const char* pattern, ...) {
  char buf[256];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

Complex random_disk(std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double th = 2.0 * kPi * u(rng);
  return std::polar(r, th);
}

/// Mean of the first vs last decile of values (already ordered along the
/// sweep direction); the drift of a flat log-ratio.
double decile_drift(const std::vector<double>& v) {
  const std::size_t n = v.size();
  const std::size_t d = std::max<std::size_t>(1, n / 10);
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    lo += v[i];
    hi += v[n - 1 - i];
  }
  return (hi - lo) / static_cast<double>(d);
}

// Bracket width max/min of the swept ratio, in linear scale.
double band(const report::RatioReport& r) {
  return std::exp(r.max_log_ratio - r.min_log_ratio);
}

// ---------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------

report::RatioReport sweep_gamma_sum_ratio(const Defaults& d) {
  report::RatioReport r;
  r.quantity = "gamma-sum-ratio";
  r.params["m_max"] = std::to_string(d.m_max);
  const double log2 = std::log(2.0);
  for (int ell : {2, 3, 4, 5}) {
    for (std::size_t m = 8 * static_cast<std::size_t>(ell); m <= d.m_max; ++m) {
      const double lS = estimates::gamma_sum(m, ell);
      r.add_log(fmt("ell=%d;m=%zu", ell, m), lS,
                static_cast<double>(m) / ell * log2);
    }
  }
  r.finalize();
  return r;
}

report::RatioReport sweep_hs_vs_symbol(const Defaults& d) {
  report::RatioReport r;
  r.quantity = "hs-vs-symbol";
  r.params["alpha"] = "1";
  r.params["m_max"] = std::to_string(d.m_max);
  for (int ell : {2, 3, 4, 5}) {
    const FockParams fp{1.0, ell, 2.0};
    for (std::size_t m = 8 * static_cast<std::size_t>(ell); m <= d.m_max; ++m) {
      const double lhs =
          hankel::log_hs_norm_sq_formula(TaylorSymbol::monomial(m), fp);
      const double rhs =
          static_cast<double>(m) / ell * std::log(2.0) +
          specfun::log_gamma(static_cast<double>(m) / ell + 1.0);
      r.add_log(fmt("ell=%d;m=%zu", ell, m), lhs, rhs);
    }
  }
  r.finalize();
  return r;
}

report::RatioReport sweep_g0_estimate(const Defaults& d) {
  report::RatioReport r;
  r.quantity = "g0-estimate";
  r.params["alpha"] = "1";
  for (int ell : {1, 2, 3}) {
    for (double p : {1.0, 2.0, FockParams::kPInfinity}) {
      for (double s = 0.0; s <= 4.01; s += 0.5) {
        quad::QuadratureSpec q;
        q.n_radial = d.grid_r;
        q.n_angular = d.grid_theta;
        q.r_max = s + std::pow(90.0 / std::max(1.0, p == FockParams::kPInfinity
                                                         ? 1.0
                                                         : p),
                               1.0 / (2.0 * ell)) +
                  2.0;
        const double val = estimates::g_factor_norm(
            Complex{s, 0.0}, ell, p, estimates::GFactor::G0, q);
        const double pexp = (p == FockParams::kPInfinity) ? 0.0
                                                          : 2.0 * (1.0 - ell) / p;
        const double comp = pexp * std::log1p(s) + std::pow(s, 2.0 * ell) / 8.0;
        const char* pname =
            (p == FockParams::kPInfinity) ? "inf" : (p == 1.0 ? "1" : "2");
        r.add_log(fmt("ell=%d;p=%s;z=%.2f", ell, pname, s), std::log(val), comp);
      }
    }
  }
  r.finalize();
  return r;
}

report::RatioReport sweep_g1_estimate(const Defaults& d) {
  report::RatioReport r;
  r.quantity = "g1-estimate";
  r.params["alpha"] = "1";
  r.params["note"] = "kernel evaluated in doubles; ell capped at 2";
  for (int ell : {1, 2}) {
    for (double pprime : {4.0 / 3.0, 2.0, 4.0, FockParams::kPInfinity}) {
      const double pconj = (pprime == FockParams::kPInfinity)
                               ? 1.0
                               : pprime / (pprime - 1.0);
      for (double s = 0.0; s <= 4.01; s += 0.5) {
        quad::QuadratureSpec q;
        q.n_radial = d.grid_r;
        q.n_angular = d.grid_theta;
        q.r_max = s + 4.0;
        const double val = estimates::g_factor_norm(
            Complex{s, 0.0}, ell, pprime, estimates::GFactor::G1, q);
        const double comp = 2.0 * (ell - 1.0) / pconj * std::log1p(s) +
                            std::pow(s, 2.0 * ell) / 8.0;
        r.add_log(fmt("ell=%d;pprime=%.3f;z=%.2f", ell,
                      pprime == FockParams::kPInfinity ? -1.0 : pprime, s),
                  std::log(val), comp);
      }
    }
  }
  r.finalize();
  return r;
}

report::RatioReport sweep_kernel_pointwise(const Defaults& d) {
  report::RatioReport r;
  r.quantity = "kernel-pointwise";
  r.params["alpha"] = "1";
  const SeriesControl ctl{100000, d.rel_tol, 30.0};
  const std::vector<double> mods = {0.5, 1.0, 2.0, 4.0, 6.0, 9.0, 12.0, 16.0};
  const std::vector<double> phases = {0.0,      kPi / 6.0, kPi / 3.0, kPi / 2.0,
                                      2.0 * kPi / 3.0, 5.0 * kPi / 6.0, kPi};
  for (int ell : {1, 2, 3}) {
    for (double s : mods) {
      for (double phi : phases) {
        const Complex lambda = std::polar(s, phi);
        const double re_pow = std::pow(s, ell) * std::cos(ell * phi);
        const double loss = std::pow(s, ell) - std::max(re_pow, 0.0);
        // |K| = (ell/pi) |E(lambda)| at alpha = 1.  The double series keeps
        // its mantissa only while the cancellation loss stays small; larger
        // points go through the multiprecision oracle.
        double log_abs_e;
        if (std::pow(s, ell) < 600.0 && loss < 25.0) {
          const auto e = specfun::mittag_leffler(ell, lambda, ctl);
          log_abs_e = std::log(std::abs(e.value));
        } else {
          log_abs_e = highprec::log_abs_ml(ell, lambda);
        }
        const double log_k = std::log(static_cast<double>(ell) / kPi) + log_abs_e;
        const double log_comp =
            (ell - 1.0) * std::log1p(s) + log_add(re_pow, 0.0);
        r.add_log(fmt("ell=%d;mod=%.2f;phase=%.4f", ell, s, phi), log_k,
                  log_comp);
      }
    }
  }
  r.finalize();
  return r;
}

report::RatioReport sweep_diagonal_exponent(const Defaults& d) {
  report::RatioReport r;
  r.quantity = "diagonal-exponent";
  r.params["alpha"] = fmt("%g", d.alpha);
  std::string flats;
  for (int ell : {2, 3}) {
    const FockParams fp{d.alpha, ell, 2.0};
    double best_band = std::numeric_limits<double>::infinity();
    int best_q = -1;
    for (int q : {ell - 1, 2 * (ell - 1)}) {
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      for (double s = 1.0; s <= 4.001; s += 0.1) {
        const double log_diag =
            fock::log_kernel_diag(s, fp) - d.alpha * std::pow(s, 2.0 * ell);
        const double log_comp = q * std::log1p(s);
        r.add_log(fmt("ell=%d;q=%d;w=%.2f", ell, q, s), log_diag, log_comp);
        const double ratio = std::exp(log_diag - log_comp);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      if (hi / lo < best_band) {
        best_band = hi / lo;
        best_q = q;
      }
    }
    flats += fmt("ell=%d:flat_q=%d;", ell, best_q);
  }
  r.params["flat_exponents"] = flats;
  r.params["note"] =
      "inline text uses (1+|w|)^(ell-1), displayed chain 2(ell-1); "
      "the flat column decides";
  r.finalize();
  return r;
}

report::RatioReport sweep_boundedness(const Defaults& d) {
  report::RatioReport r;
  r.quantity = "boundedness";
  r.params["alpha"] = "1";
  r.params["beta"] = "0.5";
  for (int ell : {1, 2}) {
    const FockParams fp{1.0, ell, 2.0};
    for (std::size_t m = 1; m <= 20; ++m) {
      const auto op = hankel::truncated_operator_norm(
          TaylorSymbol::monomial(m), fp, 4 * m + 1, d.seed);
      const auto sup =
          fock::sup_norm_weighted(TaylorSymbol::monomial(m), 0.5, ell);
      r.add(fmt("ell=%d;m=%zu", ell, m), op.value, sup.value);
    }
  }
  r.finalize();
  return r;
}

struct IParamSet {
  int ell;
  double a, b, c;
  std::string label;
};

std::vector<IParamSet> i_param_sets() {
  std::vector<IParamSet> out;
  for (int ell : {1, 2, 3}) {
    for (double p : {1.0, 2.0, 4.0}) {
      out.push_back({ell, p / 4.0, p / 2.0, 0.0, fmt("ell=%d;p=%g;side=G0", ell, p)});
      if (p > 1.0) {  // p' finite
        const double pp = p / (p - 1.0);
        out.push_back({ell, pp / 4.0, pp / 2.0, pp * (ell - 1.0),
                       fmt("ell=%d;p=%g;side=G1", ell, p)});
      }
    }
  }
  return out;
}

quad::QuadratureSpec i_quad_spec(const IParamSet& s, double z_mod) {
  quad::QuadratureSpec q;
  // Saddle at r^ell = a z^ell / b; kappa is the angular oscillation scale
  // 2 a (z r_peak)^ell, which also sets the radial peak sharpness.
  const double r_peak = z_mod * std::pow(s.a / s.b, 1.0 / s.ell);
  const double kappa =
      2.0 * s.a * s.a / s.b * std::pow(z_mod, 2.0 * s.ell) + 1.0;
  const double root = std::sqrt(kappa);
  q.n_radial = 200 + 2 * static_cast<std::size_t>(20.0 * root);
  q.n_angular = 256 + 2 * static_cast<std::size_t>(8.0 * root);
  q.r_max = r_peak + std::pow(45.0 / s.b, 1.0 / (2.0 * s.ell)) + 1.0;
  return q;
}

/// Largest per-group band, where a group is one parameter set and the
/// group's samples sweep |z| (grid labels end in ";z=...").
double grouped_band(const report::RatioReport& r) {
  std::map<std::string, std::pair<double, double>> groups;
  for (const auto& s : r.samples) {
    const auto pos = s.grid_point.rfind(";z=");
    const std::string key = s.grid_point.substr(0, pos);
    auto it = groups.find(key);
    if (it == groups.end())
      groups.emplace(key, std::pair{s.log_ratio, s.log_ratio});
    else {
      it->second.first = std::min(it->second.first, s.log_ratio);
      it->second.second = std::max(it->second.second, s.log_ratio);
    }
  }
  double worst = 0.0;
  for (const auto& [k, mm] : groups)
    worst = std::max(worst, std::exp(mm.second - mm.first));
  return worst;
}

report::RatioReport sweep_i_estimate(const Defaults& d) {
  report::RatioReport r;
  r.quantity = "i-estimate";
  (void)d;
  for (const IParamSet& s : i_param_sets()) {
    for (double z = 0.0; z <= 4.01; z += 0.5) {
      const double li = estimates::log_i_integral_series(s.ell, s.a, s.b, s.c, z);
      const double lcomp = s.a * s.a / s.b * std::pow(z, 2.0 * s.ell) +
                           (s.c + 2.0 - 2.0 * s.ell) * std::log1p(z);
      r.add_log(s.label + fmt(";z=%.2f", z), li, lcomp);
    }
  }
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------

void check(SuiteResult& sr, const std::string& name, bool pass,
           std::string detail) {
  sr.checks.push_back({name, pass, std::move(detail)});
}

SuiteResult suite_kernel(const Defaults& d) {
  SuiteResult sr;
  sr.suite = "kernel";
  std::mt19937 rng(d.seed);

  {
    const FockParams fp{1.0, 1, 2.0};
    const auto k = fock::kernel_eval({1, 0}, {1, 0}, fp);
    const double want = std::exp(1.0) / kPi;
    const double err = std::abs(k.value - Complex{want, 0.0}) / want;
    check(sr, "classical K(1,1) = e/pi", err <= d.tol_exact, fmt("rel_err=%.3g", err));
  }
  {
    const FockParams fp{1.0, 2, 2.0};
    const auto k = fock::kernel_eval({0.7, -0.3}, {0, 0}, fp);
    const double want = 2.0 / (kPi * std::sqrt(kPi));
    const double err = std::abs(k.value - Complex{want, 0.0}) / want;
    check(sr, "K(z,0) keeps only the m=0 term", err <= d.tol_exact,
          fmt("rel_err=%.3g", err));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const int ell = 1 + static_cast<int>(rng() % 3);
      const FockParams fp{1.0, ell, 2.0};
      // |z w| capped so the series keeps its mantissa for every phase.
      const double rad = std::pow(6.5, 0.5 / ell);
      const Complex z = random_disk(rng, rad), w = random_disk(rng, rad);
      const Complex a = fock::kernel_eval(z, w, fp).value;
      const Complex b = std::conj(fock::kernel_eval(w, z, fp).value);
      worst = std::max(worst, std::abs(a - b) / std::abs(a));
    }
    check(sr, "Hermitian symmetry on 1000 random pairs", worst <= d.tol_exact,
          fmt("worst_rel=%.3g", worst));
  }
  {
    std::uniform_real_distribution<double> ua(0.5, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const int ell = 1 + static_cast<int>(rng() % 3);
      const double alpha = ua(rng);
      const FockParams fp{alpha, ell, 2.0};
      const FockParams fp1{1.0, ell, 2.0};
      const double rad = std::pow(2.0, 0.5 / ell);
      const Complex z = random_disk(rng, rad), w = random_disk(rng, rad);
      const double root = std::pow(alpha, 1.0 / (2.0 * ell));
      const Complex lhs = fock::kernel_eval(z, w, fp).value;
      const Complex rhs = std::pow(alpha, 1.0 / ell) *
                          fock::kernel_eval(root * z, root * w, fp1).value;
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    check(sr, "scaling law K_alpha vs K_1", worst <= d.tol_series,
          fmt("worst_rel=%.3g", worst));
  }
  {
    auto rep = sweep_kernel_pointwise(d);
    check(sr, "pointwise estimate constant recorded",
          std::isfinite(rep.max_log_ratio),
          fmt("log_C=%.6g", rep.max_log_ratio));
    sr.reports.push_back(std::move(rep));
  }
  return sr;
}

SuiteResult suite_mittag_leffler(const Defaults& d) {
  SuiteResult sr;
  sr.suite = "mittag-leffler";
  std::mt19937 rng(d.seed);
  {
    double worst = 0.0;
    for (int i = 0; i < 400; ++i) {
      const Complex lam = random_disk(rng, 30.0);
      const auto e = specfun::mittag_leffler(1, lam);
      worst = std::max(worst, std::abs(e.value - std::exp(lam)) /
                                  std::exp(std::abs(lam)));
    }
    check(sr, "ell=1 degenerates to exp", worst <= d.tol_series,
          fmt("worst=%.3g", worst));
  }
  {
    const auto e = specfun::mittag_leffler(2, {0.0, 0.0});
    const double err = std::abs(e.value - Complex{1.0 / std::sqrt(kPi), 0.0});
    check(sr, "E(0) = 1/Gamma(1/ell)", err <= d.tol_exact, fmt("abs_err=%.3g", err));
  }
  {
    const auto e = specfun::mittag_leffler(1, {40.0, 0.0});
    const double rel = std::abs(e.value - std::exp(Complex{40.0, 0.0})) /
                       std::exp(40.0);
    check(sr, "asymptotic branch fires past the threshold",
          e.branch == specfun::MlBranch::Asymptotic && rel <= 1e-12,
          fmt("lambda=40;rel=%.3g", rel));
  }
  {
    // Exponential-sector remainder: |E - ell t^(ell-1) e^(t^ell)| * t
    // stays bounded with no growth trend (multiprecision series oracle).
    bool ok = true;
    std::string detail;
    for (int ell : {2, 3}) {
      const std::vector<double> grid =
          ell == 2 ? std::vector<double>{5, 6.5, 8, 9.5, 11, 12.5, 14, 17, 20}
                   : std::vector<double>{5, 8, 11, 14, 17, 20};
      std::vector<double> vals;
      for (double t : grid)
        vals.push_back(std::abs(highprec::ml_asymptotic_gap(ell, t)) * t);
      const double mx = *std::max_element(vals.begin(), vals.end());
      const bool trend_ok = vals.back() <= vals.front() + 1e-12;
      ok = ok && trend_ok && std::isfinite(mx);
      detail += fmt("ell=%d:max=%.3g;", ell, mx);
    }
    check(sr, "asymptotic sector remainder bounded", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int ell : {2, 3}) {
      const std::vector<double> grid =
          ell == 2 ? std::vector<double>{5, 6.5, 8, 9.5, 11, 12.5, 14, 17, 20}
                   : std::vector<double>{5, 8, 11, 14, 17, 20};
      std::vector<double> vals;
      for (double t : grid)
        vals.push_back(std::abs(highprec::ml_negative_axis(ell, t)) * t);
      const double mx = *std::max_element(vals.begin(), vals.end());
      ok = ok && mx <= d.decay_bound;
      detail += fmt("ell=%d:max=%.3g;", ell, mx);
    }
    check(sr, "negative-axis decay |E(-t)| t bounded", ok, detail);
  }
  return sr;
}

// Smallest angular node count whose first aliased kernel harmonic
// (|z0| r)^N / Gamma((N+1)/ell) survives the weight e^{-alpha r^(2 ell)}
// by less than e^{-60} anywhere in [0, r_max].
std::size_t reproduce_angular_nodes(double alpha, int ell, double z0_mod,
                                    double r_max, std::size_t base) {
  if (z0_mod == 0.0) return base;
  for (std::size_t n = base;; n *= 2) {
    const double r_pk = std::min(
        r_max, std::pow(static_cast<double>(n) / (2.0 * ell * alpha),
                        1.0 / (2.0 * ell)));
    const double peak = n * std::log(z0_mod * r_pk) -
                        specfun::log_gamma((n + 1.0) / ell) -
                        alpha * std::pow(r_pk, 2.0 * ell);
    // The extra doubling buries residual phase-coherent rounding structure
    // in the kernel values, measured at ~30x above the incoherent level.
    if (peak < -60.0 || n >= 8192) return 2 * n;
  }
}

SuiteResult suite_reproduce(const Defaults& d) {
  SuiteResult sr;
  sr.suite = "reproduce";
  const std::vector<Complex> z0s = {{0, 0}, {1.5, 0}, {1, 1}, {0, 2}};
  const std::vector<std::pair<double, int>> spaces = {{1, 1}, {2, 2}, {1, 3}};
  double worst = 0.0;
  bool ok = true;
  const std::size_t m_max = 10;
  for (const auto& [alpha, ell] : spaces) {
    const FockParams fp{alpha, ell, 2.0};
    quad::QuadratureSpec q;
    q.n_radial = d.grid_r;
    q.r_max = quad::default_r_max(alpha, ell, m_max + 10);
    for (const Complex& z0 : z0s) {
      q.n_angular = reproduce_angular_nodes(alpha, ell, std::abs(z0),
                                            q.r_max, d.grid_theta);
      const auto got = quad::reproduce_check_upto(m_max, z0, fp, q);
      for (std::size_t m = 0; m <= m_max; ++m) {
        // std::pow(0+0i, 0) is NaN
        const Complex want =
            m == 0 ? Complex{1.0, 0.0} : std::pow(z0, static_cast<double>(m));
        const double err = std::abs(got[m] - want) /
                           (1.0 + std::pow(std::abs(z0), static_cast<double>(m)));
        worst = std::max(worst, err);
        ok = ok && err <= d.tol_quad;
      }
    }
  }
  check(sr, "reproducing property P(z^m)(z0) = z0^m", ok, fmt("worst=%.3g", worst));
  return sr;
}

SuiteResult suite_hankel_hs(const Defaults& d) {
  SuiteResult sr;
  sr.suite = "hankel-hs";
  std::mt19937 rng(d.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t deg = 1 + rng() % 30;
      const int ell = 1 + static_cast<int>(rng() % 4);
      const double alpha = std::vector<double>{0.5, 1.0, 2.0}[rng() % 3];
      const FockParams fp{alpha, ell, 2.0};
      std::vector<Complex> coeffs(deg + 1);
      for (auto& c : coeffs) c = random_disk(rng, 1.0);
      coeffs[deg] += Complex{1.0, 0.0};  // keep the degree honest
      const TaylorSymbol b(std::move(coeffs));
      const double f = hankel::hs_norm_sq_formula(b, fp);
      const auto t = hankel::hs_norm_sq_truncated(b, fp, 2 * deg + 2);
      worst = std::max(worst, std::abs(f - t.value) / f);
    }
    check(sr, "matrix trace equals coefficient formula", worst <= d.tol_series,
          fmt("worst_rel=%.3g over 50 random symbols", worst));
  }
  {
    const FockParams fp{1.0, 1, 2.0};
    double worst = 0.0;
    for (std::size_t m = 0; m <= 30; ++m) {
      const double lv =
          hankel::log_hs_norm_sq_formula(TaylorSymbol::monomial(m), fp);
      const double want = static_cast<double>(m) * std::log(2.0) +
                          specfun::log_gamma(static_cast<double>(m) + 1.0);
      worst = std::max(worst, std::abs(lv - want));
    }
    check(sr, "ell=1 collapse to 2^m m!", worst <= d.tol_series,
          fmt("worst_log_err=%.3g", worst));
  }
  {
    Defaults d2 = d;
    d2.m_max = std::min<std::size_t>(d.m_max, 2000);
    auto rep = sweep_hs_vs_symbol(d2);
    bool trend_ok = true;
    for (int ell : {2, 3, 4, 5}) {
      std::vector<double> logs;
      for (const auto& s : rep.samples)
        if (s.grid_point.rfind(fmt("ell=%d;", ell), 0) == 0)
          logs.push_back(s.log_ratio);
      trend_ok = trend_ok && std::abs(decile_drift(logs)) < d.trend_max_log;
    }
    check(sr, "HS norm vs symbol norm two-sided band",
          band(rep) <= d.band_max && trend_ok,
          fmt("band=%.3g", band(rep)));
    sr.reports.push_back(std::move(rep));
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int ell = 1 + static_cast<int>(rng() % 3);
      const FockParams fp{0.5 + u01(rng) * 2.0, ell, 2.0};
      auto rand_poly = [&](std::size_t deg) {
        std::vector<Complex> c(deg + 1);
        for (auto& x : c) x = random_disk(rng, 1.0);
        return TaylorSymbol(std::move(c));
      };
      const TaylorSymbol f = rand_poly(1 + rng() % 5);
      const TaylorSymbol g = rand_poly(1 + rng() % 5);
      const TaylorSymbol b = rand_poly(1 + rng() % 8);
      const Complex lhs = hankel::hankel_bilinear_form(f, g, b, fp);
      const Complex via_f =
          quad::inner_product(g, hankel::hankel_apply_conj(b, f, fp), fp);
      const Complex via_g =
          quad::inner_product(f, hankel::hankel_apply_conj(b, g, fp), fp);
      const Complex sym = hankel::hankel_bilinear_form(g, f, b, fp);
      const double scale = std::abs(lhs) + 1e-30;
      worst = std::max({worst, std::abs(lhs - via_f) / scale,
                        std::abs(lhs - via_g) / scale,
                        std::abs(lhs - sym) / scale});
    }
    check(sr, "adjoint identity <fg,b> = <g, conj(h_b f)>", worst <= d.tol_adjoint,
          fmt("worst_rel=%.3g", worst));
  }
  {
    auto rep = sweep_boundedness(d);
    check(sr, "operator norm vs weighted sup band", band(rep) <= d.band_max,
          fmt("band=%.3g", band(rep)));
    sr.reports.push_back(std::move(rep));
  }
  {
    // Thm HSL2 at ell=1: K(w,w) e^{-alpha |w|^2} = alpha/pi exactly, so the
    // truncated unit symbol gives alpha R^2.
    const double alpha = 1.0, R = 3.0;
    const FockParams fp{alpha, 1, 2.0};
    hankel::RadialDensity phi;
    phi.poly = {1.0};
    phi.r_cut = R;
    quad::QuadratureSpec q;
    q.n_radial = d.grid_r;
    q.n_angular = 16;
    q.r_max = R;  // align the rule with the cutoff
    const auto v = hankel::hs_norm_sq_L2(phi, fp, q);
    const double err = std::abs(v.value - alpha * R * R) / (alpha * R * R);
    check(sr, "HSL2 diagonal identity at ell=1", err <= d.tol_quad,
          fmt("rel_err=%.3g", err));
  }
  {
    auto rep = sweep_diagonal_exponent(d);
    const bool ok = rep.params["flat_exponents"] == "ell=2:flat_q=2;ell=3:flat_q=4;";
    check(sr, "flat diagonal exponent is 2(ell-1)", ok,
          rep.params["flat_exponents"]);
    sr.reports.push_back(std::move(rep));
  }
  return sr;
}

SuiteResult suite_gamma_sum(const Defaults& d) {
  SuiteResult sr;
  sr.suite = "gamma-sum";
  {
    double worst = 0.0;
    for (std::size_t m = 0; m <= 200; ++m)
      worst = std::max(worst, std::abs(estimates::gamma_sum(m, 1) -
                                       static_cast<double>(m) * std::log(2.0)));
    check(sr, "ell=1 binomial collapse S(m)=2^m", worst <= d.tol_series,
          fmt("worst_log_err=%.3g", worst));
  }
  {
    auto rep = sweep_gamma_sum_ratio(d);
    bool trend_ok = true;
    std::string detail = fmt("band=%.3g;", band(rep));
    for (int ell : {2, 3, 4, 5}) {
      std::vector<double> logs;
      for (const auto& s : rep.samples)
        if (s.grid_point.rfind(fmt("ell=%d;", ell), 0) == 0)
          logs.push_back(s.log_ratio);
      const double drift = decile_drift(logs);
      trend_ok = trend_ok && std::abs(drift) < d.trend_max_log;
      detail += fmt("drift_ell%d=%.3g;", ell, drift);
    }
    check(sr, "S(m)/2^(m/ell) flat band", band(rep) <= d.band_max && trend_ok,
          detail);
    sr.reports.push_back(std::move(rep));
  }
  {
    bool ok = true;
    double worst = 0.0;
    std::size_t dominated_from = 0;
    for (int ell : {1, 2, 3, 4, 5}) {
      for (std::size_t m = 8 * static_cast<std::size_t>(ell);
           m <= std::min<std::size_t>(d.m_max, 400); ++m) {
        const auto bd = estimates::gamma_sum_decomposed(m, ell);
        const double err = std::abs(bd.total - estimates::gamma_sum(m, ell));
        worst = std::max(worst, err);
        ok = ok && err <= 1e-12;
        if (!bd.s4_dominates) dominated_from = std::max(dominated_from, m + 1);
      }
    }
    check(sr, "S1..S5 partition recombines exactly", ok,
          fmt("worst_log_err=%.3g;s4_dominates_from_m=%zu", worst, dominated_from));
  }
  return sr;
}

SuiteResult suite_chernoff(const Defaults& d) {
  (void)d;
  SuiteResult sr;
  sr.suite = "chernoff";
  bool ok = true;
  unsigned first_fail = 0;
  for (unsigned n = 0; n <= 512; ++n) {
    const auto c = estimates::chernoff_check(n);
    if (!c.holds && ok) {
      ok = false;
      first_fail = n;
    }
  }
  check(sr, "binomial tail <= 2^n e^(-n/8) for n in [0,512]", ok,
        ok ? "all hold (exact big-integer left side)"
           : fmt("first failure at n=%u", first_fail));
  return sr;
}

SuiteResult suite_i_integral(const Defaults& d) {
  SuiteResult sr;
  sr.suite = "i-integral";
  {
    double worst = 0.0;
    for (const IParamSet& s : i_param_sets()) {
      for (double z : {0.0, 1.0, 2.5, 4.0}) {
        const double ls = estimates::log_j_series(s.ell, s.a, s.b, s.c, z);
        const double lq =
            estimates::log_j_quadrature(s.ell, s.a, s.b, s.c, z, i_quad_spec(s, z));
        worst = std::max(worst, std::abs(ls - lq));
      }
    }
    check(sr, "J series vs polar quadrature", worst <= d.tol_series_vs_quad,
          fmt("worst_log_diff=%.3g", worst));
  }
  {
    auto rep = sweep_i_estimate(d);
    check(sr, "I estimate bracket", grouped_band(rep) <= d.band_max,
          fmt("per_set_band=%.3g", grouped_band(rep)));
    sr.reports.push_back(std::move(rep));
  }
  {
    const auto c = estimates::log_j_series(1, 0.5, 1.0, 0.0, 2.0);
    const double want = std::log(kPi) + 1.0;  // pi e^{|z|^2/4} at |z|=2
    check(sr, "ell=1 closed-form collapse J = pi e^(|z|^2/4)",
          std::abs(c - want) <= d.tol_series, fmt("log_err=%.3g", std::abs(c - want)));
  }
  return sr;
}

SuiteResult suite_g_factors(const Defaults& d) {
  SuiteResult sr;
  sr.suite = "g-factors";
  std::mt19937 rng(d.seed);
  {
    double worst = 0.0;
    for (int ell : {1, 2, 3}) {
      for (double s = 0.0; s <= 4.01; s += 0.5) {
        quad::QuadratureSpec q;
        q.n_radial = 200;
        q.n_angular = 128;
        q.r_max = s + 3.0;
        const double sup = estimates::g_factor_norm(
            Complex{s, 0.0}, ell, FockParams::kPInfinity, estimates::GFactor::G0, q);
        const double want = std::pow(s, 2.0 * ell) / 8.0;
        worst = std::max(worst, std::abs(std::log(sup) - want));
      }
    }
    check(sr, "sup norm of G0 equals e^(|z|^(2 ell)/8)", worst <= d.tol_quad,
          fmt("worst_log_err=%.3g", worst));
  }
  {
    double worst = 0.0;
    for (double s = 0.0; s <= 4.01; s += 0.5) {
      quad::QuadratureSpec q;
      q.n_radial = 200;
      q.n_angular = 128;
      q.r_max = s + 8.0;
      const double v =
          estimates::g_factor_norm(Complex{s, 0.0}, 1, 2.0, estimates::GFactor::G0, q);
      const double want = 0.5 * std::log(kPi) + s * s / 8.0;
      worst = std::max(worst, std::abs(std::log(v) - want));
    }
    check(sr, "ell=1, p=2: ||G0|| = sqrt(pi) e^(|z|^2/8)", worst <= d.tol_quad,
          fmt("worst_log_err=%.3g", worst));
  }
  {
    double worst = 0.0;
    const FockParams fp{1.0, 1, 2.0};
    for (double s = 0.0; s <= 4.01; s += 0.5) {
      quad::QuadratureSpec q;
      q.n_radial = 200;
      q.n_angular = 128;
      q.r_max = s + 8.0;
      const double v =
          estimates::g_factor_norm(Complex{s, 0.0}, 1, 2.0, estimates::GFactor::G1, q);
      const double want = -0.5 * std::log(kPi) + s * s / 8.0;  // (1/pi) sqrt(pi) e^{s^2/8}
      worst = std::max(worst, std::abs(std::log(v) - want));
    }
    (void)fp;
    check(sr, "ell=1: ||G1|| = pi^(-1/2) e^(|z|^2/8)", worst <= d.tol_quad,
          fmt("worst_log_err=%.3g", worst));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const int ell = 1 + static_cast<int>(rng() % 3);
      const FockParams fp{1.0, ell, 2.0};
      const double rad = std::pow(6.5, 0.5 / ell);
      const Complex z = random_disk(rng, rad), w = random_disk(rng, rad);
      const Complex k = fock::kernel_eval(w, z, fp).value;
      const Complex g0 = std::exp(specfun::int_pow(w * std::conj(z), ell) / 2.0);
      const Complex g1 =
          std::exp(-specfun::int_pow(w * std::conj(z), ell) / 2.0) * k;
      worst = std::max(worst, std::abs(g0 * g1 - k) / std::abs(k));
    }
    check(sr, "factorization G0 G1 = K on random pairs", worst <= d.tol_exact,
          fmt("worst_rel=%.3g", worst));
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> u(0.2, 2.0);
    for (int i = 0; i < 1000; ++i) {
      const int ell = 1 + static_cast<int>(rng() % 3);
      const Complex z = random_disk(rng, 3.0), w = random_disk(rng, 3.0);
      const auto sc = estimates::square_completion(z, w, ell);
      const double scale = 1.0 + std::abs(sc.lhs) + std::abs(sc.rhs);
      worst = std::max(worst, std::abs(sc.lhs - sc.rhs) / scale);
      (void)u;
    }
    check(sr, "square-completion identity", worst <= d.tol_exact,
          fmt("worst_scaled=%.3g", worst));
  }
  {
    auto rep0 = sweep_g0_estimate(d);
    check(sr, "G0 estimate band recorded", grouped_band(rep0) <= d.band_max,
          fmt("per_set_band=%.3g", grouped_band(rep0)));
    sr.reports.push_back(std::move(rep0));
    auto rep1 = sweep_g1_estimate(d);
    check(sr, "G1 estimate band recorded", grouped_band(rep1) <= d.band_max,
          fmt("per_set_band=%.3g", grouped_band(rep1)));
    sr.reports.push_back(std::move(rep1));
  }
  return sr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "kernel",    "mittag-leffler", "reproduce", "hankel-hs",
      "gamma-sum", "chernoff",       "i-integral", "g-factors"};
  return names;
}

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names = {
      "hs-vs-symbol",     "gamma-sum-ratio", "g0-estimate", "g1-estimate",
      "i-estimate",       "kernel-pointwise", "diagonal-exponent",
      "boundedness"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Defaults& d) {
  if (name == "kernel") return suite_kernel(d);
  if (name == "mittag-leffler") return suite_mittag_leffler(d);
  if (name == "reproduce") return suite_reproduce(d);
  if (name == "hankel-hs") return suite_hankel_hs(d);
  if (name == "gamma-sum") return suite_gamma_sum(d);
  if (name == "chernoff") return suite_chernoff(d);
  if (name == "i-integral") return suite_i_integral(d);
  if (name == "g-factors") return suite_g_factors(d);
  throw std::invalid_argument("unknown suite: " + name);
}

report::RatioReport make_sweep(const std::string& quantity, const Defaults& d) {
  if (quantity == "hs-vs-symbol") return sweep_hs_vs_symbol(d);
  if (quantity == "gamma-sum-ratio") return sweep_gamma_sum_ratio(d);
  if (quantity == "g0-estimate") return sweep_g0_estimate(d);
  if (quantity == "g1-estimate") return sweep_g1_estimate(d);
  if (quantity == "i-estimate") return sweep_i_estimate(d);
  if (quantity == "kernel-pointwise") return sweep_kernel_pointwise(d);
  if (quantity == "diagonal-exponent") return sweep_diagonal_exponent(d);
  if (quantity == "boundedness") return sweep_boundedness(d);
  throw std::invalid_argument("unknown sweep: " + quantity);
}

void write_suite_result(const SuiteResult& r, const Defaults& d) {
  std::filesystem::create_directories(d.out_dir);
  nlohmann::ordered_json j;
  j["schema_version"] = report::kSchemaVersion;
  j["defaults_version"] = Defaults::kVersion;
  j["suite"] = r.suite;
  j["defaults"] = {{"alpha", d.alpha},     {"ell", d.ell},
                   {"p", d.p},             {"m_max", d.m_max},
                   {"trunc", d.trunc},     {"rel_tol", d.rel_tol},
                   {"grid_r", d.grid_r},   {"grid_theta", d.grid_theta},
                   {"r_max", d.r_max},     {"seed", d.seed}};
  auto checks = nlohmann::ordered_json::array();
  for (const Check& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  auto reports = nlohmann::ordered_json::array();
  for (const auto& rep : r.reports) {
    const std::string stem = r.suite + "-" + rep.quantity;
    report::write_report(rep, d.out_dir, stem);
    reports.push_back(stem);
  }
  j["reports"] = std::move(reports);
  j["pass"] = r.passed();
  std::ofstream f(std::filesystem::path(d.out_dir) / ("suite-" + r.suite + ".json"),
                  std::ios::binary);
  f << j.dump(2) << "\n";
}

}  // namespace fockh::suites
