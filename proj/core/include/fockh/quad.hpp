#ifndef FOCKH_QUAD_HPP
#define FOCKH_QUAD_HPP

#include <functional>
#include <vector>

#include "fockh/common.hpp"
#include "fockh/fock.hpp"

namespace fockh::quad {

enum class RadialRule { GaussLegendre, GaussLaguerreTransformed };

/// Polar-grid description for integrals over the plane.
struct QuadratureSpec {
  std::size_t n_radial = 128;
  std::size_t n_angular = 128;  // must be even
  double r_max = 12.0;          // ignored by the Laguerre rule
  RadialRule radial_rule = RadialRule::GaussLegendre;

  void validate() const {
    if (n_radial < 8) throw std::domain_error("QuadratureSpec: n_radial < 8");
    if (n_angular < 8 || n_angular % 2 != 0)
      throw std::domain_error("QuadratureSpec: n_angular must be even and >= 8");
    if (!(r_max > 0.0)) throw std::domain_error("QuadratureSpec: r_max <= 0");
  }
};

/// r_max making the Gaussian-type tail of degree-d integrands negligible:
/// (2(d+20)/(alpha ell))^(1/(2 ell)) + 2.
double default_r_max(double alpha, int ell, std::size_t degree);

/// Radial nodes/weights of the chosen rule (weights do NOT include the
/// polar Jacobian r).
struct RadialNodes {
  std::vector<double> r;
  std::vector<double> w;
};
RadialNodes radial_nodes(const QuadratureSpec& q);

/// Integral over the plane of f(z), trapezoid in angle x radial rule,
/// Jacobian r dr dtheta.
Complex integrate(const QuadratureSpec& q,
                  const std::function<Complex(Complex)>& f);

/// Same, for positive integrands given through their logarithm; the
/// reduction is a log-sum-exp, so values like e^2000 are fine.
/// Returns ln of the integral.
double integrate_log(const QuadratureSpec& q,
                     const std::function<double(double, double)>& log_f);

struct NormResult {
  double value;
  bool tail_warning;  // integrand not negligible at r_max
};

/// ||f||_{F^{p,ell}_alpha} by quadrature (p < infinity).
NormResult fock_p_norm(const TaylorSymbol& f, const FockParams& fp,
                       const QuadratureSpec& q);

/// <f, g>^ell_alpha, coefficient-side (exact via monomial orthogonality).
Complex inner_product(const TaylorSymbol& f, const TaylorSymbol& g,
                      const FockParams& fp);

/// P_alpha(w^j conj(w)^k) = (||w^j||^2/||w^(j-k)||^2) z^(j-k) for j >= k,
/// and 0 otherwise.
TaylorSymbol bergman_project_mixed(std::size_t j, std::size_t k,
                                   const FockParams& fp);

/// Quadrature of the reproducing integral for z^m at z0; exact answer
/// is z0^m.
Complex reproduce_check(std::size_t m, Complex z0, const FockParams& fp,
                        const QuadratureSpec& q, const SeriesControl& ctl = {});

/// Same integral for every m in [0, m_max] with one kernel evaluation per
/// grid node; entry m of the result is reproduce_check(m, ...).
std::vector<Complex> reproduce_check_upto(std::size_t m_max, Complex z0,
                                          const FockParams& fp,
                                          const QuadratureSpec& q,
                                          const SeriesControl& ctl = {});

}  // namespace fockh::quad

#endif  // FOCKH_QUAD_HPP
