#pragma once

// Bridge between the slow (eps2 ~ I) and fast (eps2 >> I) representations.
// Multiplying T_f by the Coulomb factor g(eps2 / I) gives a single function
// that reduces to (m/I) T~_s below m and to T_f above I.

#include <span>
#include <vector>

#include "pairion/quadrature.hpp"
#include "pairion/units.hpp"

namespace pairion::matching {

/// T~_f(eps2) = T_f(eps2 / m) * g(eps2 / I), I the hydrogenlike K binding.
double t_fast_matched(EnergyValue eps2, int Z);

struct MatchedPoint {
  EnergyValue eps2;
  double t_f = 0.0;           // bare T_f(eps2 / m)
  double t_f_matched = 0.0;   // T~_f
  double t_s_scaled = 0.0;    // (m/I) T_s(eps2 / I)
  double rel_gap = 0.0;       // |T~_f - (m/I) T_s| / ((m/I) T_s)
  double rel_gap_bare = 0.0;  // same with bare T_f
};

struct OverlapReport {
  int Z = 1;
  double alpha_Z = 0.0;
  EnergyValue binding;  // I
  double x_at_binding = 0.0;  // I / m, the grid position of eps2 = I
  std::vector<MatchedPoint> points;
};

/// Compares the two sectors on a grid of eps2 / m values in (0, 1).
OverlapReport overlap_report(int Z, std::span<const double> x_grid,
                             const QuadratureConfig& cfg = {});

/// sqrt(I m) clamped into [0.1 m, 0.2 m].
EnergyValue default_matching_point(int Z);

inline constexpr double window_lo = 0.1;
inline constexpr double window_hi = 0.2;

}  // namespace pairion::matching
