#include "fockh/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fockh/specfun.hpp"

namespace fockh::estimates {

namespace {

double log_sum_exp(const std::vector<double>& logs) {
  double max_log = -std::numeric_limits<double>::infinity();
  for (double v : logs) max_log = std::max(max_log, v);
  if (!(max_log > -std::numeric_limits<double>::infinity())) return max_log;
  double acc = 0.0;
  for (double v : logs) acc += std::exp(v - max_log);
  return max_log + std::log(acc);
}

double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

}  // namespace

double gamma_sum(std::size_t m, int ell) {
  if (ell < 1) throw std::domain_error("gamma_sum: ell < 1");
  const double mm = static_cast<double>(m);
  if (mm + 2.0 - ell < 1.0)
    throw std::domain_error("gamma_sum: m + 2 - ell < 1");
  const double log_num = specfun::log_gamma((mm + 2.0 - ell) / ell);
  std::vector<double> lg(m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    lg[k] = specfun::log_gamma((static_cast<double>(k) + 1.0) / ell);
  std::vector<double> logs(m + 1);
  for (std::size_t k = 0; k <= m; ++k) logs[k] = log_num - lg[k] - lg[m - k];
  return log_sum_exp(logs);
}

GammaSumBreakdown gamma_sum_decomposed(std::size_t m, int ell) {
  if (ell < 1) throw std::domain_error("gamma_sum_decomposed: ell < 1");
  const std::size_t n = m / static_cast<std::size_t>(ell);
  const std::size_t r = m % static_cast<std::size_t>(ell);
  if (n < 8)
    throw std::domain_error("gamma_sum_decomposed: floor(m/ell) < 8");
  const double mm = static_cast<double>(m);
  const double log_num = specfun::log_gamma((mm + 2.0 - ell) / ell);
  auto term = [&](std::size_t k) {
    return log_num -
           specfun::log_gamma((static_cast<double>(k) + 1.0) / ell) -
           specfun::log_gamma((mm - static_cast<double>(k) + 1.0) / ell);
  };

  std::vector<double> s1, s2, s3, s4, s5;
  // j = 0 block (k = s, s in [0, ell)).
  for (int s = 0; s < ell; ++s) s1.push_back(term(static_cast<std::size_t>(s)));
  // Trailing block k = n*ell + s, s in [0, r].
  for (std::size_t s = 0; s <= r; ++s)
    s2.push_back(term(n * static_cast<std::size_t>(ell) + s));
  // j in [1, n-1] split at n/4 and 3n/4 (4j <= n | n < 4j < 3n | 4j >= 3n).
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<double>* dst = nullptr;
    if (4 * j <= n)
      dst = &s3;
    else if (4 * j < 3 * n)
      dst = &s4;
    else
      dst = &s5;
    for (int s = 0; s < ell; ++s)
      dst->push_back(term(j * static_cast<std::size_t>(ell) +
                          static_cast<std::size_t>(s)));
  }

  GammaSumBreakdown out;
  out.m = m;
  out.ell = ell;
  out.parts[0] = log_sum_exp(s1);
  out.parts[1] = log_sum_exp(s2);
  out.parts[2] = log_sum_exp(s3);
  out.parts[3] = log_sum_exp(s4);
  out.parts[4] = log_sum_exp(s5);
  double total = -std::numeric_limits<double>::infinity();
  for (double p : out.parts) total = log_add(total, p);
  out.total = total;
  out.ratio_to_2_pow = std::exp(total - mm / ell * std::log(2.0));
  double others = -std::numeric_limits<double>::infinity();
  for (int i : {0, 1, 2, 4}) others = log_add(others, out.parts[i]);
  out.s4_dominates = out.parts[3] >= others;
  return out;
}

ChernoffCheck chernoff_check(unsigned n) {
  using boost::multiprecision::cpp_int;
  ChernoffCheck out;
  // Pascal-row iteration: C(n,0..n/4) exactly.
  cpp_int c = 1;
  cpp_int sum = 0;
  for (unsigned i = 0; 4 * i <= n; ++i) {
    sum += c;
    c = c * (n - i) / (i + 1);
  }
  out.lhs = sum;
  out.rhs = std::exp(static_cast<double>(n) * std::log(2.0) -
                     static_cast<double>(n) / 8.0);
  out.holds = static_cast<double>(sum) <= out.rhs;
  return out;
}

double log_j_series(int ell, double a, double b, double c, double z_mod,
                    const SeriesControl& ctl) {
  ctl.validate();
  if (ell < 1 || !(a > 0.0) || !(b > 0.0) || !(c >= 0.0) || !(z_mod >= 0.0))
    throw std::domain_error("log_j_series: bad parameters");
  const double nu = (c + 2.0) / (2.0 * ell);
  const double log_prefix = std::log(kPi / ell) - nu * std::log(b);
  if (z_mod == 0.0) return log_prefix + specfun::log_gamma(nu);
  const double log_x =
      2.0 * std::log(a) - std::log(b) + 2.0 * ell * std::log(z_mod);
  std::vector<double> logs;
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < ctl.max_terms; ++k) {
    const double kk = static_cast<double>(k);
    const double lt = kk * log_x + specfun::log_gamma(kk + nu) -
                      2.0 * specfun::log_gamma(kk + 1.0);
    logs.push_back(lt);
    max_log = std::max(max_log, lt);
    if (k > 4 && lt < max_log + std::log(ctl.rel_tol) && lt < logs[k - 1])
      return log_prefix + log_sum_exp(logs);
  }
  throw TruncationError("log_j_series: series did not converge");
}

double log_j_quadrature(int ell, double a, double b, double c, double z_mod,
                        const quad::QuadratureSpec& q) {
  auto log_f = [&](double r, double th) {
    // The integrand depends on z through |z| only; put z on the
    // positive real axis.
    const double re_pow = std::pow(z_mod * r, ell) * std::cos(ell * th);
    double lv = 2.0 * a * re_pow - b * std::pow(r, 2.0 * ell);
    if (c != 0.0) lv += c * std::log(r);
    return lv;
  };
  return quad::integrate_log(q, log_f);
}

double log_i_integral_series(int ell, double a, double b, double c, double z_mod,
                             const SeriesControl& ctl) {
  const double j0 = log_j_series(ell, a, b, 0.0, z_mod, ctl);
  if (c == 0.0) return j0 + std::log(2.0);
  return log_add(j0, log_j_series(ell, a, b, c, z_mod, ctl));
}

namespace {

// ln |K^ell_1(w,z)| on the whole plane.  Double-precision series where the
// mantissa survives; the leading asymptotic term (merged with the O(1/lambda)
// tail outside the exponential sector) elsewhere.  The crossover regions only
// matter under weights that crush them by hundreds of e-folds.
double log_abs_kernel(Complex w, Complex z, int ell, const SeriesControl& ctl) {
  const Complex lambda = w * std::conj(z);
  const double mod = std::abs(lambda);
  if (mod == 0.0)
    return std::log(static_cast<double>(ell) / kPi) - specfun::log_gamma(1.0 / ell);
  const double re = specfun::int_pow(lambda, ell).real();
  const double modl = std::pow(mod, ell);
  const double loss = modl - std::max(re, 0.0);
  double log_e;
  if (modl < 600.0 && loss < 30.0) {
    const auto e = specfun::mittag_leffler(ell, lambda, ctl);
    const double m = std::abs(e.value);
    log_e = m == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(m);
  } else {
    const double lead = std::log(static_cast<double>(ell)) +
                        (ell - 1.0) * std::log(mod) + re;
    const double tail = -std::log(mod);
    log_e = std::max(lead, tail) +
            std::log1p(std::exp(-std::abs(lead - tail)));
  }
  return std::log(static_cast<double>(ell) / kPi) + log_e;
}

}  // namespace

double g_factor_norm(Complex z, int ell, double p, GFactor which,
                     const quad::QuadratureSpec& q, const SeriesControl& ctl) {
  if (ell < 1) throw std::domain_error("g_factor_norm: ell < 1");
  auto log_mod = [&](double r, double th) -> double {
    const Complex w = std::polar(r, th);
    const double re_pow =
        (specfun::int_pow(w * std::conj(z), ell)).real();
    if (which == GFactor::G0) return 0.5 * re_pow;
    return -0.5 * re_pow + log_abs_kernel(w, z, ell, ctl);
  };
  if (p == FockParams::kPInfinity) {
    auto log_obj = [&](double r, double th) {
      return log_mod(r, th) - 0.5 * std::pow(r, 2.0 * ell);
    };
    const auto mx = fock::maximize_polar(log_obj, q.r_max, q.n_radial, q.n_angular);
    return std::exp(mx.log_value);
  }
  if (!(p >= 1.0)) throw std::domain_error("g_factor_norm: p < 1");
  auto log_f = [&](double r, double th) {
    return p * (log_mod(r, th) - 0.5 * std::pow(r, 2.0 * ell));
  };
  return std::exp(quad::integrate_log(q, log_f) / p);
}

SquareCompletion square_completion(Complex z, Complex w, int ell) {
  if (ell < 1) throw std::domain_error("square_completion: ell < 1");
  const double lhs = specfun::int_pow(z * std::conj(w), ell).real() -
                     std::pow(std::abs(w), 2.0 * ell);
  const Complex diff =
      specfun::int_pow(w, ell) - specfun::int_pow(z, ell) / 2.0;
  const double rhs =
      -std::norm(diff) + std::pow(std::abs(z), 2.0 * ell) / 4.0;
  return {lhs, rhs};
}

}  // namespace fockh::estimates
