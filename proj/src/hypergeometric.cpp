#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pairion/errors.hpp"
#include "pairion/quadrature.hpp"

namespace pairion {

// 2F1(2, 4; 7/2; z). Series near the origin, a Pfaff transformation for
// moderate negative z, and the Euler integral far out on the negative axis.

namespace detail {

namespace {

// sum_k (a)_k (b)_k / ((c)_k k!) z^k, |z| < 1.
double gauss_series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 5000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > 4) return sum;
  }
  throw QuadratureError("hyp2f1 series did not converge", sum, std::abs(term));
}

}  // namespace

double hyp2f1_24_72_series(double z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("hyp2f1 series needs |z| < 1");
  return gauss_series(2.0, 4.0, 3.5, z);
}

double hyp2f1_24_72_pfaff(double z) {
  if (z > 0.0) throw DomainError("hyp2f1_24_72: z must be <= 0");
  // 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) with a = 2, c - b = -1/2.
  const double w = z / (z - 1.0);
  const double one_minus_z = 1.0 - z;
  return gauss_series(2.0, -0.5, 3.5, w) / (one_minus_z * one_minus_z);
}

double hyp2f1_24_72_euler(double z) {
  if (z > 0.0) throw DomainError("hyp2f1_24_72: z must be <= 0");
  // Gamma(7/2) / (Gamma(2) Gamma(3/2)) int_0^1 t (1-t)^(1/2) (1 - z t)^(-4) dt
  // with t = 1 - s^2.
  auto integrand = [z](double s) {
    const double t = 1.0 - s * s;
    const double d = 1.0 - z * t;
    const double d2 = d * d;
    return 2.0 * s * s * t / (d2 * d2);
  };
  const double width = 1.0 / (1.0 - z);
  std::vector<double> pts{0.0};
  for (double k : {30.0, 3.0}) {
    const double s = std::sqrt(std::max(0.0, 1.0 - k * width));
    if (s > pts.back() && s < 1.0) pts.push_back(s);
  }
  pts.push_back(1.0);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-13;
  cfg.abs_tol = 1e-300;
  cfg.max_subdivisions = 2000;
  return 3.75 * integrate(integrand, std::span<const double>(pts), cfg).value;
}

}  // namespace detail

double hyp2f1_24_72(double z) {
  if (!(z <= 0.0)) throw DomainError("hyp2f1_24_72: z must be <= 0, got " + std::to_string(z));
  if (z >= -0.5) return detail::hyp2f1_24_72_series(z);
  if (z >= -9.0) return detail::hyp2f1_24_72_pfaff(z);
  return detail::hyp2f1_24_72_euler(z);
}

}  // namespace pairion
