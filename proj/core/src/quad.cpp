#include "fockh/quad.hpp"

#include <algorithm>
#include <cmath>

#include "fockh/specfun.hpp"

namespace fockh::quad {

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void gauss_legendre(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Chebyshev-based initial guess.
    double z = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * static_cast<double>(j) + 1.0) * z * p1 -
              static_cast<double>(j) * p2) /
             (static_cast<double>(j) + 1.0);
      }
      pp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

// Gauss-Laguerre nodes/weights for int_0^inf e^{-x} f(x) dx, returned
// with the e^{x} factor folded in so they integrate plain f on [0,inf).
void gauss_laguerre(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  double z = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      z = 3.0 / (1.0 + 2.4 * static_cast<double>(n));
    else if (i == 1)
      z += 15.0 / (1.0 + 2.5 * static_cast<double>(n));
    else
      z += (1.0 + 2.55 * static_cast<double>(i - 1)) /
           (1.9 * static_cast<double>(i - 1)) * (z - x[i - 2]);
    double pp = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * static_cast<double>(j) + 1.0 - z) * p1 -
              static_cast<double>(j) * p2) /
             (static_cast<double>(j) + 1.0);
      }
      pp = static_cast<double>(n) * (p0 - p1) / z;
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-14 * std::max(1.0, z)) break;
    }
    x[i] = z;
    // w_i = x_i / ((n+1)^2 [L_{n+1}(x_i)]^2); fold in e^{x_i} via lgamma-safe form.
    double p0 = 1.0, p1 = 0.0;
    for (std::size_t j = 0; j < n + 1; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * static_cast<double>(j) + 1.0 - z) * p1 -
            static_cast<double>(j) * p2) /
           (static_cast<double>(j) + 1.0);
    }
    const double np1 = static_cast<double>(n) + 1.0;
    w[i] = std::exp(z) * z / (np1 * np1 * p0 * p0);
  }
}

}  // namespace

double default_r_max(double alpha, int ell, std::size_t degree) {
  return std::pow(2.0 * (static_cast<double>(degree) + 20.0) / (alpha * ell),
                  1.0 / (2.0 * ell)) +
         2.0;
}

RadialNodes radial_nodes(const QuadratureSpec& q) {
  q.validate();
  RadialNodes out;
  if (q.radial_rule == RadialRule::GaussLegendre) {
    std::vector<double> x, w;
    gauss_legendre(q.n_radial, x, w);
    out.r.resize(q.n_radial);
    out.w.resize(q.n_radial);
    for (std::size_t i = 0; i < q.n_radial; ++i) {
      out.r[i] = 0.5 * q.r_max * (x[i] + 1.0);
      out.w[i] = 0.5 * q.r_max * w[i];
    }
  } else {
    gauss_laguerre(q.n_radial, out.r, out.w);
  }
  return out;
}

Complex integrate(const QuadratureSpec& q,
                  const std::function<Complex(Complex)>& f) {
  const RadialNodes rn = radial_nodes(q);
  const double dth = 2.0 * kPi / static_cast<double>(q.n_angular);
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < rn.r.size(); ++i) {
    // Kahan-compensated ring sum: the ring can cancel from e^(+16)-sized
    // values down to O(1), where plain accumulation noise dominates.
    Complex ring{0.0, 0.0};
    Complex comp{0.0, 0.0};
    for (std::size_t j = 0; j < q.n_angular; ++j) {
      const double th = dth * static_cast<double>(j);
      const Complex y = f(std::polar(rn.r[i], th)) - comp;
      const Complex t = ring + y;
      comp = (t - ring) - y;
      ring = t;
    }
    acc += ring * (rn.w[i] * rn.r[i] * dth);
  }
  return acc;
}

double integrate_log(const QuadratureSpec& q,
                     const std::function<double(double, double)>& log_f) {
  const RadialNodes rn = radial_nodes(q);
  const double dth = 2.0 * kPi / static_cast<double>(q.n_angular);
  std::vector<double> logs;
  logs.reserve(rn.r.size() * q.n_angular);
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rn.r.size(); ++i) {
    if (rn.r[i] <= 0.0) continue;
    const double lw = std::log(rn.w[i] * rn.r[i] * dth);
    for (std::size_t j = 0; j < q.n_angular; ++j) {
      const double th = dth * static_cast<double>(j);
      const double lv = log_f(rn.r[i], th) + lw;
      logs.push_back(lv);
      max_log = std::max(max_log, lv);
    }
  }
  if (!(max_log > -std::numeric_limits<double>::infinity())) return max_log;
  double acc = 0.0;
  for (double lv : logs) acc += std::exp(lv - max_log);
  return max_log + std::log(acc);
}

NormResult fock_p_norm(const TaylorSymbol& f, const FockParams& fp,
                       const QuadratureSpec& q) {
  fp.validate();
  if (fp.p == FockParams::kPInfinity)
    throw std::domain_error("fock_p_norm: p = infinity; use sup_norm_weighted");
  auto integrand_log = [&](double r, double th) {
    const Complex z = std::polar(r, th);
    const double mod = std::abs(f.eval(z));
    if (mod == 0.0) return -std::numeric_limits<double>::infinity();
    return fp.p * (std::log(mod) - 0.5 * fp.alpha * std::pow(r, 2.0 * fp.ell));
  };
  const double log_int = integrate_log(q, integrand_log);
  // Tail probe: largest integrand value on the outer circle against the peak.
  double tail = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < q.n_angular; ++j)
    tail = std::max(tail, integrand_log(q.r_max * (1.0 - 1e-12),
                                        2.0 * kPi * j / q.n_angular));
  const bool warn = tail > log_int + std::log(1e-14);
  return {std::exp(log_int / fp.p), warn};
}

Complex inner_product(const TaylorSymbol& f, const TaylorSymbol& g,
                      const FockParams& fp) {
  fp.validate();
  const std::size_t n = std::min(f.coeffs.size(), g.coeffs.size());
  Complex acc{0.0, 0.0};
  for (std::size_t m = 0; m < n; ++m)
    acc += f.coeffs[m] * std::conj(g.coeffs[m]) * fock::monomial_norm_sq(m, fp);
  return acc;
}

TaylorSymbol bergman_project_mixed(std::size_t j, std::size_t k,
                                   const FockParams& fp) {
  fp.validate();
  if (j < k) return TaylorSymbol{};
  const double log_ratio = fock::log_monomial_norm_sq(j, fp) -
                           fock::log_monomial_norm_sq(j - k, fp);
  return TaylorSymbol::monomial(j - k, Complex{std::exp(log_ratio), 0.0});
}

std::vector<Complex> reproduce_check_upto(std::size_t m_max, Complex z0,
                                          const FockParams& fp,
                                          const QuadratureSpec& q,
                                          const SeriesControl& ctl) {
  fp.validate();
  const RadialNodes rn = radial_nodes(q);
  const double dth = 2.0 * kPi / static_cast<double>(q.n_angular);
  std::vector<Complex> acc(m_max + 1, Complex{0.0, 0.0});
  std::vector<Complex> ring(m_max + 1), comp(m_max + 1);
  for (std::size_t i = 0; i < rn.r.size(); ++i) {
    std::fill(ring.begin(), ring.end(), Complex{0.0, 0.0});
    std::fill(comp.begin(), comp.end(), Complex{0.0, 0.0});
    const double r2l = std::pow(rn.r[i], 2.0 * fp.ell);
    for (std::size_t j = 0; j < q.n_angular; ++j) {
      const Complex w = std::polar(rn.r[i], dth * static_cast<double>(j));
      Complex v = fock::kernel_eval(z0, w, fp, ctl).value *
                  std::exp(-fp.alpha * r2l);
      for (std::size_t m = 0; m <= m_max; ++m) {
        const Complex y = v - comp[m];
        const Complex t = ring[m] + y;
        comp[m] = (t - ring[m]) - y;
        ring[m] = t;
        v *= w;
      }
    }
    for (std::size_t m = 0; m <= m_max; ++m)
      acc[m] += ring[m] * (rn.w[i] * rn.r[i] * dth);
  }
  return acc;
}

Complex reproduce_check(std::size_t m, Complex z0, const FockParams& fp,
                        const QuadratureSpec& q, const SeriesControl& ctl) {
  return reproduce_check_upto(m, z0, fp, q, ctl).back();
}

}  // namespace fockh::quad
