#pragma once

// Numerical backbone: globally adaptive Gauss-Kronrod (10/21) quadrature on
// finite and semi-infinite intervals, the fixed-parameter Gauss
// hypergeometric function needed by the fast spectrum, and a bracketed root
// finder.

#include <functional>
#include <initializer_list>
#include <limits>
#include <span>

namespace pairion {

enum class SemiInfiniteMap {
  rational,     // x = a + t / (1 - t)
  exponential,  // x = a - ln(1 - t)
};

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 400;
  SemiInfiniteMap semi_infinite_map = SemiInfiniteMap::rational;

  /// Throws DomainError unless tolerances are positive and
  /// max_subdivisions >= 10.
  void validate() const;

  QuadratureConfig with_rel_tol(double tol) const {
    auto c = *this;
    c.rel_tol = tol;
    return c;
  }
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

using Integrand = std::function<double(double)>;

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Integrates f over [a, b]; b may be +infinity. Integrable endpoint
/// singularities are fine (f is never evaluated at a finite endpoint), but
/// one at an endpoint far from 0 is only resolved to about sqrt(machine
/// epsilon) since the spacing of doubles limits how close panels can get.
/// Throws QuadratureError carrying the best estimate when the tolerance
/// max(abs_tol, rel_tol |I|) is not met within max_subdivisions.
IntegrationResult integrate(const Integrand& f, double a, double b,
                            const QuadratureConfig& cfg = {});

/// Same as above, seeding the adaptive partition with the given ascending
/// breakpoints (first and last are the integration limits; the last may be
/// +infinity). Useful when the integrand has known peaks or kinks.
IntegrationResult integrate(const Integrand& f, std::span<const double> breakpoints,
                            const QuadratureConfig& cfg = {});

inline IntegrationResult integrate(const Integrand& f, std::initializer_list<double> breakpoints,
                                   const QuadratureConfig& cfg = {}) {
  return integrate(f, std::span<const double>(breakpoints.begin(), breakpoints.size()), cfg);
}

/// 2F1(2, 4; 7/2; z) for z <= 0, to >= 10 significant digits.
double hyp2f1_24_72(double z);

namespace detail {
// The three evaluation routes, exposed for the overlap tests.
double hyp2f1_24_72_series(double z);
double hyp2f1_24_72_pfaff(double z);
double hyp2f1_24_72_euler(double z);
}  // namespace detail

/// Root of f in [lo, hi] with f(lo) f(hi) < 0; the final bracket is no wider
/// than tol. Throws BracketError when there is no sign change.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace pairion
