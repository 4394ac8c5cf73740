#include "fockh/highprec.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fockh::highprec {

namespace {

using Real = boost::multiprecision::mpfr_float;

unsigned digits_for(int ell, double mod) {
  // The largest series term is ~exp(|lambda|^ell); to resolve an O(1)
  // result underneath it we need that many decimal digits plus slack.
  const double peak = std::pow(mod, ell);
  const double digits = peak * 0.4342944819032518 + 60.0;
  return static_cast<unsigned>(std::min(digits, 2.0e5));
}

struct ComplexMp {
  Real re, im;
  ComplexMp operator*(const ComplexMp& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexMp operator/(const Real& d) const { return {re / d, im / d}; }
  ComplexMp& operator+=(const ComplexMp& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Real abs2() const { return re * re + im * im; }
};

// Series sum with the stride-ell term recurrence
// t_{k+ell} = t_k * lambda^ell / ((k+1)/ell).
ComplexMp ml_series_mp(int ell, const ComplexMp& lambda) {
  const double mod = std::sqrt(static_cast<double>(lambda.abs2()));
  ComplexMp lam_ell{Real(1), Real(0)};
  for (int i = 0; i < ell; ++i) lam_ell = lam_ell * lambda;

  std::vector<ComplexMp> chain;
  chain.reserve(static_cast<std::size_t>(ell));
  ComplexMp lam_pow{Real(1), Real(0)};
  for (int s = 0; s < ell; ++s) {
    const Real g = boost::multiprecision::tgamma(Real(s + 1) / ell);
    chain.push_back(lam_pow / g);
    lam_pow = lam_pow * lambda;
  }

  ComplexMp sum{Real(0), Real(0)};
  Real max_abs2(0);
  const double peak_k = std::max(8.0, 2.0 * ell * std::pow(mod, ell));
  const std::size_t k_budget =
      static_cast<std::size_t>(std::min(peak_k + 1e5, 5.0e6));
  for (std::size_t block = 0;; ++block) {
    Real block_abs2(0);
    for (int s = 0; s < ell; ++s) {
      ComplexMp& t = chain[static_cast<std::size_t>(s)];
      sum += t;
      block_abs2 = std::max(block_abs2, t.abs2());
      const Real denom = (Real(static_cast<double>(block) * ell) + s + 1) / ell;
      t = (t * lam_ell) / denom;
    }
    max_abs2 = std::max(max_abs2, block_abs2);
    const std::size_t k = (block + 1) * static_cast<std::size_t>(ell);
    // Past the peak, run the tail down to a tiny absolute size: the
    // result can be O(1) under a mountain of cancelling terms, so a
    // max-relative cutoff would truncate too early.
    if (k > static_cast<std::size_t>(peak_k) && block_abs2 < Real("1e-80"))
      return sum;
    if (k > k_budget)
      throw std::runtime_error("ml_series_mp: term budget exceeded");
  }
}

}  // namespace

double ml_asymptotic_gap(int ell, double t) {
  if (ell < 1 || !(t > 0.0)) throw std::domain_error("ml_asymptotic_gap: bad args");
  Real::default_precision(digits_for(ell, t));
  const ComplexMp lam{Real(t), Real(0)};
  const ComplexMp e = ml_series_mp(ell, lam);
  Real lead = Real(ell);
  for (int i = 0; i < ell - 1; ++i) lead *= Real(t);
  lead *= boost::multiprecision::exp(boost::multiprecision::pow(Real(t), ell));
  return static_cast<double>(e.re - lead);
}

double ml_negative_axis(int ell, double t) {
  if (ell < 1 || !(t >= 0.0)) throw std::domain_error("ml_negative_axis: bad args");
  Real::default_precision(digits_for(ell, t));
  const ComplexMp lam{Real(-t), Real(0)};
  return static_cast<double>(ml_series_mp(ell, lam).re);
}

double log_abs_ml(int ell, std::complex<double> lambda) {
  if (ell < 1) throw std::domain_error("log_abs_ml: ell < 1");
  Real::default_precision(digits_for(ell, std::abs(lambda)));
  const ComplexMp lam{Real(lambda.real()), Real(lambda.imag())};
  const ComplexMp e = ml_series_mp(ell, lam);
  return static_cast<double>(boost::multiprecision::log(e.abs2()) / 2);
}

}  // namespace fockh::highprec
