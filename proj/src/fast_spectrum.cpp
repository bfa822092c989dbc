#include "pairion/fast_spectrum.hpp"

#include <array>
#include <cmath>
#include <string>

#include "pairion/errors.hpp"
#include "pairion/parallel.hpp"

namespace pairion::fast {

PairInvariantMassSq::PairInvariantMassSq(double delta2) : delta2_(delta2) {
  if (!(delta2 >= 4.0))
    throw DomainError("PairInvariantMassSq: Delta^2 must be >= 4 m^2, got " + std::to_string(delta2));
}

std::pair<double, double> delta2_bounds(EnergyValue omega) {
  if (!(omega.value >= 2.0))
    throw DomainError("delta2_bounds: omega below pair threshold (2 m), got " +
                      std::to_string(omega.value));
  return {4.0, 2.0 * omega.value};
}

double delta2_of_angle(EnergyValue eps2, EnergyValue omega, double t2) {
  if (!(eps2.value >= 0.0)) throw DomainError("delta2_of_angle: eps2 must be >= 0");
  if (!(std::abs(t2) <= 1.0)) throw DomainError("delta2_of_angle: |t2| must be <= 1");
  const double e = eps2.value;
  const double p2 = std::sqrt(e * e + 2.0 * e);
  return -2.0 * e * (omega.value + 1.0) + 2.0 * omega.value * p2 * t2;
}

BetaL beta_and_L(PairInvariantMassSq delta2) {
  const double d2 = delta2.value();
  const double beta = std::sqrt((d2 - 4.0) / d2);
  if (beta == 0.0) return {0.0, 2.0};
  // (1/beta) ln((1+beta)/(1-beta)); near beta = 1 use (1-beta)(1+beta) = 4/Delta^2
  if (beta < 0.5) return {beta, 2.0 * std::atanh(beta) / beta};
  return {beta, std::log(0.25 * (1.0 + beta) * (1.0 + beta) * d2) / beta};
}

double w_distribution(EnergyValue eps2, PairInvariantMassSq delta2) {
  const double e = eps2.value;
  if (!(e > 0.0)) throw DomainError("w_distribution: eps2 must be > 0");
  const double d2 = delta2.value();
  const auto [beta, L] = beta_and_L(delta2);
  const double B = (d2 + 2.0 * e) * (d2 + 2.0 * e);
  // Overall sign chosen so that W >= 0 and its Delta^2 integral is +T_f.
  const double A =
      4.0 * beta * (L - 1.0 - 4.0 * (d2 * (1.0 - 4.0 * e) + L * (2.0 * (2.0 * e + 1.0) + d2 * (e - 1.0))) / B);
  return A / (e * B);
}

namespace detail {

double t_fast_small_x_series(double x) {
  // T_f(x) = 14/(9x) + sum_k c_k x^k
  static constexpr std::array<double, 10> c = {
      -8.0 / 15.0,          68.0 / 315.0,      -88.0 / 945.0,       16.0 / 385.0,
      -512.0 / 27027.0,     1184.0 / 135135.0, -448.0 / 109395.0,   12032.0 / 6235515.0,
      -1024.0 / 1119195.0,  512.0 / 1174173.0};
  double poly = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) poly = poly * x + *it;
  return 14.0 / (9.0 * x) + poly;
}

double t_fast_closed_form(double x) {
  const double x2 = x * x;
  const double two_plus = 2.0 + x;
  const double rational = -(x2 * x + x2 + 2.0 * x - 1.0) / (x2 * two_plus * two_plus);
  const double log_coeff = 2.0 * (2.0 * x2 * x2 + 7.0 * x2 * x + 16.0 * x2 + 5.0 * x - 3.0) /
                           (3.0 * std::pow(x * two_plus, 2.5));
  const double log_term = std::asinh(std::sqrt(0.5 * x));
  const double hyp_term = -2.0 * (1.0 - 4.0 * x) / 15.0 * hyp2f1_24_72(-0.5 * x);
  return 2.0 / x * (rational + log_coeff * log_term + hyp_term);
}

double t_fast_large_x_series(double x) {
  // T_f(x) = (2/3)(4L + 1)/x^2 + L sum_{k>=3} d_k / x^k, L = asinh(sqrt(x/2))
  static constexpr std::array<double, 9> d = {
      -4.0,   16.0 / 3.0, -26.0 / 3.0,   15.0,          -161.0 / 6.0,
      49.0,   -363.0 / 4.0, 2717.0 / 16.0, -30745.0 / 96.0};
  const double L = std::asinh(std::sqrt(0.5 * x));
  const double u = 1.0 / x;
  double poly = 0.0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) poly = poly * u + *it;
  return u * u * ((2.0 / 3.0) * (4.0 * L + 1.0) + L * u * poly);
}

}  // namespace detail

double t_fast(double x) {
  if (!(x > 0.0)) throw DomainError("t_fast: x must be > 0, got " + std::to_string(x));
  if (x < detail::small_x_switch) return detail::t_fast_small_x_series(x);
  if (x > detail::large_x_switch) return detail::t_fast_large_x_series(x);
  return detail::t_fast_closed_form(x);
}

double t_fast_oracle(double x, const QuadratureConfig& cfg, std::optional<EnergyValue> omega) {
  if (!(x > 0.0)) throw DomainError("t_fast_oracle: x must be > 0");
  // Delta^2 = 4 + u^2 removes the square-root edge at threshold.
  auto integrand = [x](double u) {
    const PairInvariantMassSq d2(4.0 + u * u);
    return 2.0 * u * w_distribution({x}, d2);
  };
  const double scale = std::sqrt(2.0 * x + 4.0);
  if (omega) {
    const auto [lo, hi] = delta2_bounds(*omega);
    (void)lo;
    const double u_max = std::sqrt(hi - 4.0);
    if (u_max == 0.0) return 0.0;
    std::vector<double> pts{0.0};
    for (double p : {0.5, 2.0, scale, 4.0 * scale})
      if (p < u_max && p > pts.back()) pts.push_back(p);
    pts.push_back(u_max);
    return integrate(integrand, std::span<const double>(pts), cfg).value;
  }
  std::vector<double> pts{0.0};
  for (double p : {0.5, 2.0, scale, 4.0 * scale})
    if (p > pts.back()) pts.push_back(p);
  pts.push_back(infinity);
  return integrate(integrand, std::span<const double>(pts), cfg).value;
}

std::vector<FastSpectrumPoint> t_fast_table(std::span<const double> xs) {
  std::vector<FastSpectrumPoint> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = {xs[i], t_fast(xs[i])}; });
  return out;
}

}  // namespace pairion::fast
