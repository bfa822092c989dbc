#include "pairion/matching.hpp"

#include <algorithm>
#include <cmath>

#include "pairion/errors.hpp"
#include "pairion/fast_spectrum.hpp"
#include "pairion/parallel.hpp"
#include "pairion/slow_spectrum.hpp"

namespace pairion::matching {

double t_fast_matched(EnergyValue eps2, int Z) {
  if (!(eps2.value > 0.0)) throw DomainError("t_fast_matched: eps2 must be > 0");
  const double I = hydrogenlike_binding(Z).value;
  return fast::t_fast(eps2.value) * slow::g_factor(eps2.value / I);
}

OverlapReport overlap_report(int Z, std::span<const double> x_grid, const QuadratureConfig& cfg) {
  const EnergyValue I = hydrogenlike_binding(Z);
  for (double x : x_grid)
    if (!(x > 0.0 && x < 1.0)) throw DomainError("overlap_report: grid must lie inside (0, m)");

  OverlapReport report;
  report.Z = Z;
  report.alpha_Z = constants::alpha * Z;
  report.binding = I;
  report.x_at_binding = I.value;
  report.points.resize(x_grid.size());
  parallel_for(x_grid.size(), [&](std::size_t i) {
    const double x = x_grid[i];
    MatchedPoint p;
    p.eps2 = {x};
    p.t_f = fast::t_fast(x);
    p.t_f_matched = p.t_f * slow::g_factor(x / I.value);
    p.t_s_scaled = slow::t_slow(x / I.value, cfg) / I.value;
    p.rel_gap = std::abs(p.t_f_matched - p.t_s_scaled) / p.t_s_scaled;
    p.rel_gap_bare = std::abs(p.t_f - p.t_s_scaled) / p.t_s_scaled;
    report.points[i] = p;
  }, 4);
  return report;
}

EnergyValue default_matching_point(int Z) {
  const double I = hydrogenlike_binding(Z).value;
  return {std::clamp(std::sqrt(I), window_lo, window_hi)};
}

}  // namespace pairion::matching
