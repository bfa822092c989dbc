#pragma once

// Spectrum of fast ionized electrons (I << eps2 << omega). In this regime the
// bound electron acts as a free electron at rest and the spectrum follows the
// triplet-production distribution integrated over the pair invariant mass:
//
//   dsigma / d eps2 = n_e * alpha r_e^2 / m * T_f(eps2 / m).

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pairion/quadrature.hpp"
#include "pairion/units.hpp"

namespace pairion::fast {

/// Squared invariant mass of the created pair, Delta^2 = (p_e + p_p)^2, in
/// units of m^2. Physical values satisfy Delta^2 >= 4.
class PairInvariantMassSq {
 public:
  explicit PairInvariantMassSq(double delta2);
  double value() const { return delta2_; }

 private:
  double delta2_;
};

struct FastSpectrumPoint {
  double x = 0.0;    // eps2 / m
  double t_f = 0.0;  // T_f(x)
};

/// Physical range [4, 2 omega] of Delta^2 for photon energy omega > 2.
/// omega == 2 gives the degenerate threshold range (4, 4).
std::pair<double, double> delta2_bounds(EnergyValue omega);

/// Delta^2 = -2 eps2 (omega + 1) + 2 omega p2 t2 with p2 = sqrt(eps2^2 + 2 eps2),
/// t2 the cosine between the photon and the ionized electron.
double delta2_of_angle(EnergyValue eps2, EnergyValue omega, double t2);

struct BetaL {
  double beta = 0.0;
  double L = 2.0;  // (1/beta) ln((1+beta)/(1-beta))
};

BetaL beta_and_L(PairInvariantMassSq delta2);

/// Double differential distribution W(eps2, Delta^2) = A / (eps2 B),
/// B = (Delta^2 + 2 eps2)^2. Nonnegative on the physical domain.
double w_distribution(EnergyValue eps2, PairInvariantMassSq delta2);

/// Closed-form energy distribution T_f(x), x = eps2 / m > 0. Valid physically
/// for I << eps2 << omega; numerically stable for all x > 0.
double t_fast(double x);

/// Quadrature of W(x, Delta^2) over Delta^2 in [4, upper], upper = 2 omega
/// when omega is given and infinity otherwise. With no upper limit it must equal t_fast(x).
double t_fast_oracle(double x, const QuadratureConfig& cfg = {},
                     std::optional<EnergyValue> omega = std::nullopt);

/// Evaluates t_fast on a grid, in parallel when the grid is large.
std::vector<FastSpectrumPoint> t_fast_table(std::span<const double> xs);

namespace detail {
// Individual evaluation routes of t_fast, exposed for overlap tests.
double t_fast_small_x_series(double x);
double t_fast_closed_form(double x);
double t_fast_large_x_series(double x);

inline constexpr double small_x_switch = 0.05;
inline constexpr double large_x_switch = 50.0;
}  // namespace detail

}  // namespace pairion::fast
