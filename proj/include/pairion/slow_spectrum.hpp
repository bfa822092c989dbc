#pragma once

// Spectrum of slow ionized electrons (eps2 ~ I) for the K shell of a light
// hydrogenlike ion. The outgoing electron is a nonrelativistic Coulomb
// continuum state, so the recoil-momentum integral of the bound-free form
// factor |Phi_K(p2, q)|^2 replaces the plane-wave result:
//
//   dsigma / d eps2 = alpha r_e^2 / I * T_s(eps),  eps = eps2 / I,
//   T_s(eps) = (14/9) K(eps).
//
// Momenta are in units of m; with eta = alpha Z the outgoing momentum is
// p2 = eta sqrt(eps) and the Sommerfeld parameter xi = eta / p2 = 1/sqrt(eps).

#include <span>
#include <vector>

#include "pairion/quadrature.hpp"

namespace pairion::slow {

struct SommerfeldState {
  double xi = 0.0;   // eta / p2
  double eps = 0.0;  // eps2 / I = xi^-2
  double eta = 0.0;  // alpha Z
  double p2 = 0.0;   // eta sqrt(eps)

  static SommerfeldState from_eps(double eps, double eta);
};

struct SlowIntegrandParams {
  double mu = 1.0;  // 1 + eps
  double nu = 1.0;  // 1 - eps
  double eps = 0.0;

  explicit SlowIntegrandParams(double eps);

  /// arg(x + nu + 2 i sqrt(eps)), continuous in x and inside (0, pi).
  double gamma1(double x) const;
};

/// Squared Coulomb normalization 2 pi xi / (1 - exp(-2 pi xi)).
double n_squared(double xi);

/// |Phi_K(p2, q)|^2 for the hydrogenlike 1s state and the outgoing Coulomb
/// wave, with cos_angle the cosine between p2 and q.
double phi_k_sq(double p2, double q, double eta, double cos_angle);

/// Solid-angle reduction: int dOmega / (2 pi)^3 |Phi_K|^2 = q^2 X(p2, q).
double x_angular(double p2, double q, double eta);

/// Spectral function K(eps); K(0) = 1 - (7/3) e^-4, K -> 1/(eps + 1) at large eps.
double k_slow(double eps, const QuadratureConfig& cfg = {});

/// J(eps) = int_0^inf dx e^{-2 gamma1/sqrt(eps)} (mu + 3x) / (x^2 + 2 nu x + mu^2)^3,
/// so that K = 2^7 J / (3 (1 - exp(-2 pi / sqrt(eps)))).
double j_integral(double eps, const QuadratureConfig& cfg = {});

/// Closed form of J extended to the whole real line in y = x + nu:
/// (3/64) e^{-pi xi} sinh(pi xi) / (eps + 1).
double j1_closed(double eps);

double t_slow(double eps, const QuadratureConfig& cfg = {});

/// (14/9) / (eps + 1)
double t_slow_approx(double eps);

/// Leading Coulomb correction eps / (eps + 1).
double g_factor(double eps);

struct SlowSpectrumPoint {
  double eps = 0.0;
  double t_s = 0.0;
  double t_s_approx = 0.0;
  double g = 0.0;
};

std::vector<SlowSpectrumPoint> t_slow_table(std::span<const double> eps_grid,
                                            const QuadratureConfig& cfg = {});

namespace detail {
inline constexpr double zero_eps_branch = 1e-12;
}

}  // namespace pairion::slow
