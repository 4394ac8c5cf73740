#ifndef FOCKH_HIGHPREC_HPP
#define FOCKH_HIGHPREC_HPP

#include <complex>

namespace fockh::highprec {

// Multiple-precision evaluations of E_{1/ell,1/ell}.  The plain series
// loses everything to cancellation (negative axis) or overflow
// (exponential sector) in doubles once |lambda|^ell passes a few
// hundred; these routines pick the working precision from |lambda|^ell
// and sum the series exactly enough to return a meaningful double.

/// E(t) - ell * t^(ell-1) * exp(t^ell) for real t > 0 (the O(1/t)
/// remainder of the exponential-sector asymptotics).
double ml_asymptotic_gap(int ell, double t);

/// E(-t) for real t >= 0 (decay sector; result is O(1/t)).
double ml_negative_axis(int ell, double t);

/// ln |E(lambda)| for arbitrary complex lambda.
double log_abs_ml(int ell, std::complex<double> lambda);

}  // namespace fockh::highprec

#endif  // FOCKH_HIGHPREC_HPP
