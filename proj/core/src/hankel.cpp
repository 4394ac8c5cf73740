#include "fockh/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fockh/specfun.hpp"

namespace fockh::hankel {

namespace {

double log_sum_exp(const std::vector<double>& logs) {
  double max_log = -std::numeric_limits<double>::infinity();
  for (double v : logs) max_log = std::max(max_log, v);
  if (!(max_log > -std::numeric_limits<double>::infinity())) return max_log;
  double acc = 0.0;
  for (double v : logs) acc += std::exp(v - max_log);
  return max_log + std::log(acc);
}

}  // namespace

HankelMatrix hankel_matrix(const TaylorSymbol& b, const FockParams& fp,
                           std::size_t trunc) {
  fp.validate();
  if (trunc < 1) throw std::domain_error("hankel_matrix: trunc < 1");
  HankelMatrix h;
  h.n = trunc;
  h.fp = fp;
  h.entries.assign(trunc * trunc, Complex{0.0, 0.0});
  std::vector<double> log_norms(2 * trunc - 1);
  for (std::size_t m = 0; m < log_norms.size(); ++m)
    log_norms[m] = fock::log_monomial_norm_sq(m, fp);
  for (std::size_t i = 0; i < trunc; ++i) {
    for (std::size_t j = i; j < trunc; ++j) {
      const std::size_t m = i + j;
      if (m >= b.coeffs.size()) continue;
      const Complex c = b.coeffs[m];
      if (c == Complex{0.0, 0.0}) continue;
      const double log_ratio =
          log_norms[m] - 0.5 * (log_norms[i] + log_norms[j]);
      if (log_ratio > 709.0)
        throw OverflowError("hankel_matrix: norm ratio exceeds double range");
      const Complex e = c * std::exp(log_ratio);
      h.at(i, j) = e;
      h.at(j, i) = e;
    }
  }
  return h;
}

double log_hs_norm_sq_formula(const TaylorSymbol& b, const FockParams& fp) {
  fp.validate();
  if (b.is_zero()) return -std::numeric_limits<double>::infinity();
  const int ell = fp.ell;
  const std::size_t deg = b.degree();
  std::vector<double> lg(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k)
    lg[k] = specfun::log_gamma((static_cast<double>(k) + 1.0) / ell);
  std::vector<double> outer;
  outer.reserve(deg + 1);
  std::vector<double> inner;
  for (std::size_t m = 0; m <= deg && m < b.coeffs.size(); ++m) {
    const double cmod = std::abs(b.coeffs[m]);
    if (cmod == 0.0) continue;
    inner.clear();
    for (std::size_t k = 0; k <= m; ++k) inner.push_back(-lg[k] - lg[m - k]);
    const double log_inner = log_sum_exp(inner);
    outer.push_back(2.0 * std::log(cmod) -
                    static_cast<double>(m) / ell * std::log(fp.alpha) +
                    2.0 * lg[m] + log_inner);
  }
  return log_sum_exp(outer);
}

double hs_norm_sq_formula(const TaylorSymbol& b, const FockParams& fp) {
  if (b.is_zero()) return 0.0;
  const double lv = log_hs_norm_sq_formula(b, fp);
  if (lv > 709.0)
    throw OverflowError("hs_norm_sq_formula: value exceeds double range");
  return std::exp(lv);
}

TruncatedHs hs_norm_sq_truncated(const TaylorSymbol& b, const FockParams& fp,
                                 std::size_t trunc) {
  const HankelMatrix h = hankel_matrix(b, fp, trunc);
  double acc = 0.0;
  for (const Complex& e : h.entries) acc += std::norm(e);
  const bool under = !b.is_zero() && trunc <= 2 * b.degree();
  return {acc, under};
}

DeltaNorm symbol_delta_norm_sq(const TaylorSymbol& b, double beta, int ell,
                               const quad::QuadratureSpec& q) {
  if (!(beta > 0.0)) throw std::domain_error("symbol_delta_norm_sq: beta <= 0");
  if (ell < 1) throw std::domain_error("symbol_delta_norm_sq: ell < 1");
  auto log_f = [&](double r, double th) {
    const double mod = std::abs(b.eval(std::polar(r, th)));
    if (mod == 0.0) return -std::numeric_limits<double>::infinity();
    return 2.0 * std::log(mod) - beta * std::pow(r, 2.0 * ell) +
           2.0 * (ell - 1.0) * std::log1p(r);
  };
  const double log_int = quad::integrate_log(q, log_f);
  double tail = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < q.n_angular; ++j)
    tail = std::max(tail, log_f(q.r_max * (1.0 - 1e-12),
                                2.0 * kPi * j / q.n_angular));
  // Coefficient comparator: sum |c_m|^2 2^(m/ell) Gamma(m/ell + 1).
  std::vector<double> logs;
  for (std::size_t m = 0; m < b.coeffs.size(); ++m) {
    const double cmod = std::abs(b.coeffs[m]);
    if (cmod == 0.0) continue;
    logs.push_back(2.0 * std::log(cmod) +
                   static_cast<double>(m) / ell * std::log(2.0) +
                   specfun::log_gamma(static_cast<double>(m) / ell + 1.0));
  }
  const double comp =
      logs.empty() ? 0.0 : std::exp(log_sum_exp(logs));
  return {std::exp(log_int), comp, tail > log_int + std::log(1e-14)};
}

quad::NormResult hs_norm_sq_L2(const RadialDensity& phi_sq, const FockParams& fp,
                               const quad::QuadratureSpec& q) {
  fp.validate();
  auto log_f = [&](double r, double /*th*/) {
    const double d = phi_sq.eval(r);
    if (d <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(d) + fock::log_kernel_diag(r, fp) -
           fp.alpha * std::pow(r, 2.0 * fp.ell);
  };
  const double log_int = quad::integrate_log(q, log_f);
  const double tail = log_f(q.r_max * (1.0 - 1e-12), 0.0);
  return {std::exp(log_int), tail > log_int + std::log(1e-14)};
}

OperatorNorm truncated_operator_norm(const TaylorSymbol& b, const FockParams& fp,
                                     std::size_t trunc, unsigned seed) {
  const HankelMatrix h = hankel_matrix(b, fp, trunc);
  const std::size_t n = h.n;
  auto apply = [&](const std::vector<Complex>& v, std::vector<Complex>& out,
                   bool adjoint) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j)
        acc += (adjoint ? std::conj(h.at(j, i)) : h.at(i, j)) * v[j];
      out[i] = acc;
    }
  };
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  double best = 0.0;
  bool converged = false;
  std::size_t total_iters = 0;
  constexpr int kRestarts = 3;  // initial run plus two restarts
  constexpr std::size_t kIters = 200;
  for (int restart = 0; restart < kRestarts; ++restart) {
    std::vector<Complex> v(n), av(n), aav(n);
    for (auto& x : v) x = Complex{dist(rng), dist(rng)};
    double sigma = 0.0, prev = -1.0;
    bool run_converged = false;
    for (std::size_t it = 0; it < kIters; ++it) {
      ++total_iters;
      double nv = 0.0;
      for (const auto& x : v) nv += std::norm(x);
      nv = std::sqrt(nv);
      if (nv == 0.0) break;
      for (auto& x : v) x /= nv;
      apply(v, av, false);
      apply(av, aav, true);
      double ray = 0.0;  // v* (A*A) v  with v normalized
      for (std::size_t i = 0; i < n; ++i)
        ray += (std::conj(v[i]) * aav[i]).real();
      sigma = std::sqrt(std::max(0.0, ray));
      if (prev >= 0.0 && std::abs(sigma - prev) <= 1e-10 * std::max(sigma, 1e-300)) {
        run_converged = true;
        v = aav;
        break;
      }
      prev = sigma;
      v = aav;
    }
    best = std::max(best, sigma);
    converged = converged || run_converged;
  }
  return {best, total_iters, converged};
}

Complex hankel_bilinear_form(const TaylorSymbol& f, const TaylorSymbol& g,
                             const TaylorSymbol& b, const FockParams& fp) {
  fp.validate();
  const TaylorSymbol fg = multiply(f, g);
  const std::size_t n = std::min(fg.coeffs.size(), b.coeffs.size());
  Complex acc{0.0, 0.0};
  for (std::size_t m = 0; m < n; ++m)
    acc += fg.coeffs[m] * std::conj(b.coeffs[m]) * fock::monomial_norm_sq(m, fp);
  return acc;
}

TaylorSymbol hankel_apply_conj(const TaylorSymbol& b, const TaylorSymbol& f,
                               const FockParams& fp) {
  fp.validate();
  if (b.is_zero() || f.is_zero()) return TaylorSymbol{};
  std::vector<Complex> out(b.coeffs.size(), Complex{0.0, 0.0});
  for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
    if (b.coeffs[j] == Complex{0.0, 0.0}) continue;
    for (std::size_t k = 0; k < f.coeffs.size() && k <= j; ++k) {
      if (f.coeffs[k] == Complex{0.0, 0.0}) continue;
      const double log_ratio = fock::log_monomial_norm_sq(j, fp) -
                               fock::log_monomial_norm_sq(j - k, fp);
      out[j - k] +=
          b.coeffs[j] * std::conj(f.coeffs[k]) * std::exp(log_ratio);
    }
  }
  return TaylorSymbol(std::move(out));
}

}  // namespace fockh::hankel
