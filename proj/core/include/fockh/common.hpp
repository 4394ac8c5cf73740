#ifndef FOCKH_COMMON_HPP
#define FOCKH_COMMON_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace fockh {

using Complex = std::complex<double>;

/// Raised when a series fails to meet its tolerance within max_terms.
class TruncationError : public std::runtime_error {
public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a value leaves the representable double range.
class OverflowError : public std::runtime_error {
public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Truncation/tolerance policy shared by every infinite series
/// (kernel, Mittag-Leffler, I-integral).
struct SeriesControl {
  std::size_t max_terms = 100000;
  double rel_tol = 1e-14;
  // |lambda| above which the asymptotic branch of the Mittag-Leffler
  // function is preferred over the plain series.
  double asym_threshold = 30.0;

  void validate() const {
    if (max_terms < 1) throw std::domain_error("SeriesControl: max_terms < 1");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
      throw std::domain_error("SeriesControl: rel_tol out of (0,1)");
    if (!(asym_threshold > 0.0))
      throw std::domain_error("SeriesControl: asym_threshold <= 0");
  }
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace fockh

#endif  // FOCKH_COMMON_HPP
