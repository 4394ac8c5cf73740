#ifndef FOCKH_HANKEL_HPP
#define FOCKH_HANKEL_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "fockh/common.hpp"
#include "fockh/fock.hpp"
#include "fockh/quad.hpp"

namespace fockh::hankel {

/// N x N matrix of the small Hankel operator in the orthonormal
/// monomial basis: entries[m][n] = c_{m+n} ||w^(m+n)||^2 / (||w^m|| ||w^n||).
struct HankelMatrix {
  std::size_t n = 0;
  std::vector<Complex> entries;  // row-major
  FockParams fp;

  Complex& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  Complex at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

HankelMatrix hankel_matrix(const TaylorSymbol& b, const FockParams& fp,
                           std::size_t trunc);

/// ||h_b||^2_{S_2(F^{2,ell}_alpha)} from the Taylor-coefficient sum
/// sum_m |c_m|^2 alpha^(-m/ell) Gamma((m+1)/ell)^2
///        sum_{k<=m} 1/(Gamma((k+1)/ell) Gamma((m-k+1)/ell)),
/// accumulated by log-sum-exp.
double hs_norm_sq_formula(const TaylorSymbol& b, const FockParams& fp);

/// ln of the above; safe for monomials of degree in the thousands.
double log_hs_norm_sq_formula(const TaylorSymbol& b, const FockParams& fp);

struct TruncatedHs {
  double value;
  bool under_truncated;  // trunc <= 2*degree(b): band not fully captured
};

/// Sum of squared entries of hankel_matrix (squared column norms).
TruncatedHs hs_norm_sq_truncated(const TaylorSymbol& b, const FockParams& fp,
                                 std::size_t trunc);

struct DeltaNorm {
  double quadrature;        // integral-side value
  double coefficient_side;  // sum |c_m|^2 2^(m/ell) Gamma(m/ell + 1)
  bool tail_warning;
};

/// ||b||^2_{F^{2,ell}_{beta,Delta}} = int |b|^2 e^{-beta |z|^(2 ell)}
/// (1+|z|)^(2(ell-1)) dnu, plus the coefficient-side comparator of the
/// alpha = 1, beta = 1/2 normalization.
DeltaNorm symbol_delta_norm_sq(const TaylorSymbol& b, double beta, int ell,
                               const quad::QuadratureSpec& q);

/// Radial test density: |phi(w)|^2 = (sum_j p_j r^j) e^{-g r^s} on r <= r_cut.
struct RadialDensity {
  std::vector<double> poly;  // coefficients in r (plain powers)
  double gauss_coeff = 0.0;  // g
  double gauss_power = 2.0;  // s
  double r_cut = std::numeric_limits<double>::infinity();

  double eval(double r) const {
    if (r > r_cut) return 0.0;
    double acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * r + *it;
    return acc * std::exp(-gauss_coeff * std::pow(r, gauss_power));
  }
};

/// ||h_phi||^2_{S_2(L^{2,ell}_alpha)} = int |phi|^2 K(w,w) e^{-alpha |w|^(2 ell)} dnu.
quad::NormResult hs_norm_sq_L2(const RadialDensity& phi_sq, const FockParams& fp,
                               const quad::QuadratureSpec& q);

struct OperatorNorm {
  double value;
  std::size_t iterations;
  bool converged;
};

/// Top singular value of the truncated Hankel matrix by power iteration
/// on A* A (200 iterations, seeded random start, two restarts).
OperatorNorm truncated_operator_norm(const TaylorSymbol& b, const FockParams& fp,
                                     std::size_t trunc, unsigned seed = 12345);

/// Lambda_b(f,g) = <fg, b>^ell_alpha, coefficient-side.
Complex hankel_bilinear_form(const TaylorSymbol& f, const TaylorSymbol& g,
                             const TaylorSymbol& b, const FockParams& fp);

/// conj(h_b(f)) = P_alpha(b conj(f)) for polynomial f and b, assembled
/// from mixed-monomial projections.  Independent route for the adjoint
/// identity <fg, b> = <g, conj(h_b(f))>.
TaylorSymbol hankel_apply_conj(const TaylorSymbol& b, const TaylorSymbol& f,
                               const FockParams& fp);

}  // namespace fockh::hankel

#endif  // FOCKH_HANKEL_HPP
