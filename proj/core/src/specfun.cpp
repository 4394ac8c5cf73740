#include "fockh/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fockh::specfun {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x <= 0");
  return std::lgamma(x);
}

double stirling_ratio(double s, double t, double delta) {
  if (!(delta > 0.0)) throw std::domain_error("stirling_ratio: delta <= 0");
  if (!(s >= 2.0 * delta)) throw std::domain_error("stirling_ratio: s < 2*delta");
  if (!(std::abs(t) <= delta)) throw std::domain_error("stirling_ratio: |t| > delta");
  return std::exp(log_gamma(s + t) - t * std::log(s) - log_gamma(s));
}

double exp_weighted_sum(double s, double a, const SeriesControl& ctl) {
  ctl.validate();
  if (!(s >= 0.0)) throw std::domain_error("exp_weighted_sum: s < 0");
  double sum = 1.0;  // k = 0 term: 1/1^a = 1
  double term = 1.0;
  double comp = 0.0;
  for (std::size_t k = 1; k <= ctl.max_terms; ++k) {
    term *= s / static_cast<double>(k);
    const double contrib = term * std::pow(static_cast<double>(k) + 1.0, -a);
    // Kahan step
    const double y = contrib - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(contrib) <
        ctl.rel_tol * (std::abs(sum) + std::numeric_limits<double>::min()))
      return sum;
  }
  throw TruncationError("exp_weighted_sum: series did not converge");
}

Complex int_pow(Complex lambda, int ell) {
  Complex p{1.0, 0.0};
  for (int i = 0; i < ell; ++i) p *= lambda;
  return p;
}

namespace {

// Kahan-compensated series sum of E_{1/ell,1/ell}.  The term recurrence
// runs in strides of ell so that Gamma((k+1)/ell + 1) = ((k+1)/ell) *
// Gamma((k+1)/ell) keeps each residue chain rational in lambda^ell.
MlValue ml_series(int ell, Complex lambda, const SeriesControl& ctl) {
  const Complex lam_ell = int_pow(lambda, ell);
  std::vector<Complex> chain(static_cast<std::size_t>(ell));
  Complex lam_pow{1.0, 0.0};
  for (int s = 0; s < ell; ++s) {
    chain[static_cast<std::size_t>(s)] =
        lam_pow * std::exp(-log_gamma((s + 1.0) / ell));
    lam_pow *= lambda;
  }
  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  double max_abs_term = 0.0;
  auto add = [&](Complex contrib) {
    const Complex y = contrib - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  std::size_t terms = 0;
  for (std::size_t block = 0; terms < ctl.max_terms; ++block) {
    double block_max = 0.0;
    for (int s = 0; s < ell && terms < ctl.max_terms; ++s, ++terms) {
      Complex& t = chain[static_cast<std::size_t>(s)];
      add(t);
      block_max = std::max(block_max, std::abs(t));
      // k = block*ell + s; next term in this chain has k' = k + ell.
      t *= lam_ell / ((static_cast<double>(block) * ell + s + 1.0) / ell);
    }
    max_abs_term = std::max(max_abs_term, block_max);
    if (!std::isfinite(block_max) || !std::isfinite(std::abs(sum)))
      throw OverflowError("mittag_leffler: series term overflowed double range");
    if (block_max <
        ctl.rel_tol * (std::abs(sum) + std::numeric_limits<double>::min())) {
      // Cancellation floor: the sum is only known to ~eps * largest term.
      // Flag results that sit at the rounding floor instead of failing, so
      // integrators can still sweep through regions whose weight kills the
      // noise; callers needing full accuracy must check the flag.
      const double floor = max_abs_term * std::numeric_limits<double>::epsilon();
      const bool noisy = std::abs(sum) < 10.0 * floor;
      return {sum, MlBranch::Series, terms, noisy};
    }
  }
  throw TruncationError("mittag_leffler: series did not converge");
}

}  // namespace

MlValue mittag_leffler(int ell, Complex lambda, const SeriesControl& ctl) {
  ctl.validate();
  if (ell < 1) throw std::domain_error("mittag_leffler: ell < 1");
  const double mod = std::abs(lambda);
  if (mod > ctl.asym_threshold) {
    const bool in_sector = std::abs(std::arg(lambda)) <= kPi / (2.0 * ell);
    if (in_sector) {
      const Complex lam_ell = int_pow(lambda, ell);
      const Complex value =
          static_cast<double>(ell) * int_pow(lambda, ell - 1) * std::exp(lam_ell);
      if (!std::isfinite(std::abs(value)))
        throw OverflowError("mittag_leffler: asymptotic value overflows double");
      return {value, MlBranch::Asymptotic, 0};
    }
  }
  return ml_series(ell, lambda, ctl);
}

double log_mittag_leffler_positive(int ell, double x) {
  if (ell < 1) throw std::domain_error("log_mittag_leffler_positive: ell < 1");
  if (!(x >= 0.0)) throw std::domain_error("log_mittag_leffler_positive: x < 0");
  if (x == 0.0) return -log_gamma(1.0 / ell);
  // Terms are positive: log-sum-exp with a running maximum.
  const double lx = std::log(x);
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  // Generous term budget: the peak sits near k ~ ell * x^ell, but only if
  // that is reachable; beyond the peak terms decay superexponentially.
  const double xe = std::pow(x, ell);
  const std::size_t k_peak =
      static_cast<std::size_t>(std::min(1e7, std::ceil(ell * xe)));
  logs.reserve(k_peak + 64);
  for (std::size_t k = 0;; ++k) {
    const double lt = static_cast<double>(k) * lx - log_gamma((k + 1.0) / ell);
    logs.push_back(lt);
    max_log = std::max(max_log, lt);
    if (k > k_peak && lt < max_log - 60.0) break;
    if (k > 2 * k_peak + 100000)
      throw TruncationError("log_mittag_leffler_positive: term budget exceeded");
  }
  double acc = 0.0;
  for (double lt : logs) acc += std::exp(lt - max_log);
  return max_log + std::log(acc);
}

}  // namespace fockh::specfun
