#ifndef FOCKH_ESTIMATES_HPP
#define FOCKH_ESTIMATES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "fockh/common.hpp"
#include "fockh/fock.hpp"
#include "fockh/quad.hpp"

namespace fockh::estimates {

/// ln S(m), S(m) = sum_{k=0}^m Gamma((m+2-ell)/ell) /
///                 [Gamma((k+1)/ell) Gamma((m-k+1)/ell)],
/// by direct log-sum-exp over k.  Requires m + 2 - ell >= 1.
double gamma_sum(std::size_t m, int ell);

/// The five-part split of S(m) used in the proof: write m = n*ell + r,
/// n >= 8; S1 is the j = 0 boundary, S2 the k in [n*ell, m] boundary,
/// S3/S4/S5 split j in [1, n-1] at n/4 and 3n/4.
struct GammaSumBreakdown {
  std::size_t m = 0;
  int ell = 1;
  double total = 0.0;                      // log-domain
  double parts[5] = {0, 0, 0, 0, 0};       // log-domain S1..S5
  double ratio_to_2_pow = 0.0;             // S(m) / 2^(m/ell)
  bool s4_dominates = false;               // S4 >= S1+S2+S3+S5
};

GammaSumBreakdown gamma_sum_decomposed(std::size_t m, int ell);

/// Exact check of sum_{i<=n/4} C(n,i) <= 2^n e^{-n/8}.
struct ChernoffCheck {
  boost::multiprecision::cpp_int lhs;
  double rhs = 0.0;
  bool holds = false;
};

ChernoffCheck chernoff_check(unsigned n);

/// ln J^ell_{a,b,c}(z) where
/// J = (pi/ell) b^{-(c+2)/(2 ell)} sum_k (a^2/b)^k |z|^(2 k ell)
///     Gamma(k + (c+2)/(2 ell)) / (k!)^2,
/// the exact polar-series value of
/// int |e^{a (conj(z) w)^ell}|^2 e^{-b |w|^(2 ell)} |w|^c dnu(w).
double log_j_series(int ell, double a, double b, double c, double z_mod,
                    const SeriesControl& ctl = {});

/// Quadrature twin of log_j_series (independent oracle route).
double log_j_quadrature(int ell, double a, double b, double c, double z_mod,
                        const quad::QuadratureSpec& q);

/// ln I where I = J_{a,b,0} + J_{a,b,c}.
double log_i_integral_series(int ell, double a, double b, double c, double z_mod,
                             const SeriesControl& ctl = {});

enum class GFactor { G0, G1 };

/// ||G_0(.,z)||_{F^{p,ell}_1} or ||G_1(.,z)||_{F^{p,ell}_1}, where
/// G_0(w,z) = e^{(w conj z)^ell / 2} and G_1 = e^{-(w conj z)^ell / 2} K^ell_1(w,z).
/// p = FockParams::kPInfinity selects the weighted grid supremum.
/// The G1 route evaluates the kernel in doubles and is limited to
/// |z| r_max below the series overflow scale (ell <= 2 over the sweeps used here).
double g_factor_norm(Complex z, int ell, double p, GFactor which,
                     const quad::QuadratureSpec& q, const SeriesControl& ctl = {});

/// Both sides of Re((z conj w)^ell) - |w|^(2 ell)
///   = -|w^ell - z^ell/2|^2 + |z|^(2 ell)/4.
struct SquareCompletion {
  double lhs;
  double rhs;
};
SquareCompletion square_completion(Complex z, Complex w, int ell);

}  // namespace fockh::estimates

#endif  // FOCKH_ESTIMATES_HPP
