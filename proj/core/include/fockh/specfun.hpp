#ifndef FOCKH_SPECFUN_HPP
#define FOCKH_SPECFUN_HPP

#include <complex>

#include "fockh/common.hpp"

namespace fockh::specfun {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(s+t) / (s^t Gamma(s)), computed in log domain.
/// Requires s >= 2*delta and |t| <= delta.
double stirling_ratio(double s, double t, double delta);

/// f_a(s) = sum_{k>=0} s^k/k! * 1/(k+1)^a  for s >= 0.
double exp_weighted_sum(double s, double a, const SeriesControl& ctl = {});

enum class MlBranch { Series, Asymptotic };

struct MlValue {
  Complex value;
  MlBranch branch;
  std::size_t terms_used;  // 0 for the asymptotic branch
  bool noisy = false;      // cancellation ate the double mantissa; the value
                           // is at the rounding floor of the largest term
};

/// E_{1/ell,1/ell}(lambda) = sum_k lambda^k / Gamma((k+1)/ell).
///
/// For |lambda| <= ctl.asym_threshold the series is summed with Kahan
/// compensation.  Beyond the threshold, inside the sector
/// |arg lambda| <= pi/(2 ell), the leading asymptotic term
/// ell * lambda^(ell-1) * exp(lambda^ell) is used instead, and the
/// returned branch tag says so.  Outside the sector at large modulus
/// the series is attempted and an accuracy failure is signalled when
/// cancellation exhausts double precision.
MlValue mittag_leffler(int ell, Complex lambda, const SeriesControl& ctl = {});

/// ln E_{1/ell,1/ell}(x) for real x >= 0, by log-sum-exp over the
/// series terms.  Never overflows; usable far beyond the double range
/// of E itself (diagonal kernel values).
double log_mittag_leffler_positive(int ell, double x);

/// lambda^ell by repeated multiplication (no exp/log branch cuts).
Complex int_pow(Complex lambda, int ell);

/// log(2*pi)/2, handy for Stirling-type checks.
inline constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

}  // namespace fockh::specfun

#endif  // FOCKH_SPECFUN_HPP
