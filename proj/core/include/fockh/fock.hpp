#ifndef FOCKH_FOCK_HPP
#define FOCKH_FOCK_HPP

#include <functional>
#include <limits>
#include <vector>

#include "fockh/common.hpp"

namespace fockh {

/// Parameters of the space F^{p,ell}_alpha with weight e^{-alpha |z|^(2 ell)}.
struct FockParams {
  double alpha = 1.0;
  int ell = 1;
  double p = 2.0;  // kPInfinity encodes p = infinity

  static constexpr double kPInfinity = std::numeric_limits<double>::infinity();

  void validate() const {
    if (!(alpha > 0.0)) throw std::domain_error("FockParams: alpha <= 0");
    if (ell < 1) throw std::domain_error("FockParams: ell < 1");
    if (!(p >= 1.0)) throw std::domain_error("FockParams: p < 1");
  }
};

/// Finite Taylor coefficient list c_0..c_M of a polynomial symbol.
struct TaylorSymbol {
  std::vector<Complex> coeffs;

  TaylorSymbol() = default;
  explicit TaylorSymbol(std::vector<Complex> c) : coeffs(std::move(c)) { trim(); }

  /// The monomial z^m.
  static TaylorSymbol monomial(std::size_t m, Complex c = {1.0, 0.0}) {
    std::vector<Complex> v(m + 1, Complex{0.0, 0.0});
    v[m] = c;
    return TaylorSymbol(std::move(v));
  }

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_zero() const { return coeffs.empty(); }

  Complex eval(Complex z) const {
    Complex acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == Complex{0.0, 0.0}) coeffs.pop_back();
  }
};

TaylorSymbol multiply(const TaylorSymbol& f, const TaylorSymbol& g);

namespace fock {

/// ||z^m||^2 = pi / (ell * alpha^((m+1)/ell)) * Gamma((m+1)/ell).
double monomial_norm_sq(std::size_t m, const FockParams& fp);

/// ln of the above; safe for m up to ~1e6.
double log_monomial_norm_sq(std::size_t m, const FockParams& fp);

struct KernelValue {
  Complex value;
  bool asymptotic_branch;  // true when the Mittag-Leffler asymptotics fired
  bool noisy = false;      // series cancellation reached the rounding floor
};

/// K^ell_alpha(z,w) = (ell alpha^(1/ell)/pi) E_{1/ell,1/ell}(alpha^(1/ell) z conj(w)).
KernelValue kernel_eval(Complex z, Complex w, const FockParams& fp,
                        const SeriesControl& ctl = {});

/// ln K^ell_alpha(w,w) on the diagonal, where the kernel is real positive.
/// Usable far beyond the double range of the kernel itself.
double log_kernel_diag(double abs_w, const FockParams& fp);

/// Coefficients of the dilated symbol Phi^ell_lambda f(z) = f(lambda^(1/(2 ell)) z):
/// c_m -> lambda^(m/(2 ell)) c_m, times the F^p normalizer lambda^(1/(p ell))
/// when `normalized` is set.
TaylorSymbol dilate(const TaylorSymbol& f, double lambda, const FockParams& fp,
                    bool normalized = false);

struct SupResult {
  double value;
  double arg_radius;        // radius where the supremum was found
  bool boundary_attained;   // supremum sat on the outer grid radius
};

/// sup_z |b(z)| e^{-beta |z|^(2 ell) / 2} by a coarse polar grid plus
/// golden-section refinement in radius (and angle).
SupResult sup_norm_weighted(const TaylorSymbol& b, double beta, int ell,
                            std::size_t n_radial = 256, std::size_t n_angular = 64,
                            double r_max = 0.0 /* 0 = auto */);

/// Generic maximizer of a log-scale objective g(r, theta) over the polar
/// rectangle [0, r_max] x [0, 2 pi).  Returns max g.  Shared by the sup-norm
/// search and the G0 sup checks.
struct PolarMax {
  double log_value;
  double r;
  double theta;
  bool boundary;
};
PolarMax maximize_polar(const std::function<double(double, double)>& log_f,
                        double r_max, std::size_t n_radial, std::size_t n_angular);

}  // namespace fock
}  // namespace fockh

#endif  // FOCKH_FOCK_HPP
