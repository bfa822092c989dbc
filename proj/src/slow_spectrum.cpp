#include "pairion/slow_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pairion/errors.hpp"
#include "pairion/parallel.hpp"
#include "pairion/units.hpp"

namespace pairion::slow {

using constants::pi;

SommerfeldState SommerfeldState::from_eps(double eps, double eta) {
  if (!(eps > 0.0)) throw DomainError("SommerfeldState: eps must be > 0");
  if (!(eta > 0.0)) throw DomainError("SommerfeldState: eta must be > 0");
  const double root = std::sqrt(eps);
  return {1.0 / root, eps, eta, eta * root};
}

SlowIntegrandParams::SlowIntegrandParams(double e) : mu(1.0 + e), nu(1.0 - e), eps(e) {
  if (!(e >= 0.0)) throw DomainError("SlowIntegrandParams: eps must be >= 0");
}

double SlowIntegrandParams::gamma1(double x) const {
  return std::atan2(2.0 * std::sqrt(eps), x + nu);
}

double n_squared(double xi) {
  if (!(xi >= 0.0)) throw DomainError("n_squared: xi must be >= 0");
  const double a = 2.0 * pi * xi;
  if (xi < 1e-6) return 1.0 + 0.5 * a + a * a / 12.0;
  return a / -std::expm1(-a);
}

namespace {

void check_momenta(const char* who, double p2, double q, double eta) {
  if (!(p2 > 0.0) || !(q > 0.0) || !(eta > 0.0))
    throw DomainError(std::string(who) + ": p2, q and eta must be > 0");
}

// exp(2 xi gamma) with gamma = arg(q^2 + eta^2 - p2^2 - 2 i eta p2) in (-pi, 0).
double coulomb_phase_factor(double p2, double q, double eta) {
  const double xi = eta / p2;
  const double gamma = std::atan2(-2.0 * eta * p2, q * q + eta * eta - p2 * p2);
  return n_squared(xi) * std::exp(2.0 * xi * gamma);
}

}  // namespace

double phi_k_sq(double p2, double q, double eta, double cos_angle) {
  check_momenta("phi_k_sq", p2, q, eta);
  if (!(std::abs(cos_angle) <= 1.0)) throw DomainError("phi_k_sq: |cos_angle| must be <= 1");
  const double xi = eta / p2;
  const double pq = p2 * q * cos_angle;
  const double a = p2 * p2 + q * q - 2.0 * pq + eta * eta;
  const double re_b = q * q + eta * eta - p2 * p2;
  const double b_abs2 = re_b * re_b + 4.0 * eta * eta * p2 * p2;
  const double eta5 = std::pow(eta, 5);
  const double num = eta5 * ((q * q - pq) * (q * q - pq) + xi * xi * pq * pq);
  const double a2 = a * a;
  return 256.0 * pi * coulomb_phase_factor(p2, q, eta) * num / (a2 * a2 * b_abs2);
}

double x_angular(double p2, double q, double eta) {
  check_momenta("x_angular", p2, q, eta);
  const double q2 = q * q;
  const double p22 = p2 * p2;
  const double eta2 = eta * eta;
  const double u = std::pow(eta, 5) * (p22 + 3.0 * q2 + eta2);
  const double base = (q2 - p22) * (q2 - p22) + 2.0 * eta2 * (q2 + p22) + eta2 * eta2;
  const double v = base * base * base;
  return 128.0 / (3.0 * pi) * coulomb_phase_factor(p2, q, eta) * u / v;
}

namespace {

std::vector<double> j_breakpoints(double eps) {
  const double center = eps - 1.0;
  const double width = 2.0 * std::sqrt(eps);
  std::vector<double> candidates{center - 8.0 * width, center - 2.0 * width, center,
                                 center + 2.0 * width, center + 8.0 * width,
                                 center + 40.0 * width, 1.0,          10.0};
  std::sort(candidates.begin(), candidates.end());
  std::vector<double> pts{0.0};
  for (double c : candidates)
    if (c > pts.back() * (1.0 + 1e-9) + 1e-12) pts.push_back(c);
  pts.push_back(infinity);
  return pts;
}

double k_zero_limit(const QuadratureConfig& cfg) {
  // eps -> 0: exponent -2 gamma1/sqrt(eps) -> -4/(x+1), prefactor -> 2^7/3.
  auto f = [](double x) {
    const double s = x + 1.0;
    const double s2 = s * s;
    return std::exp(-4.0 / s) * (1.0 + 3.0 * x) / (s2 * s2 * s2);
  };
  return 128.0 / 3.0 * integrate(f, {0.0, 1.0, 10.0, infinity}, cfg).value;
}

}  // namespace

double j_integral(double eps, const QuadratureConfig& cfg) {
  if (!(eps > 0.0)) throw DomainError("j_integral: eps must be > 0");
  const SlowIntegrandParams params(eps);
  const double inv_root = 1.0 / std::sqrt(eps);
  auto f = [&params, inv_root](double x) {
    const double y = x + params.nu;
    const double d = y * y + 4.0 * params.eps;  // x^2 + 2 nu x + mu^2
    return std::exp(-2.0 * params.gamma1(x) * inv_root) * (params.mu + 3.0 * x) / (d * d * d);
  };
  const auto pts = j_breakpoints(eps);
  return integrate(f, std::span<const double>(pts), cfg).value;
}

double j1_closed(double eps) {
  if (!(eps > 0.0)) throw DomainError("j1_closed: eps must be > 0");
  const double a = pi / std::sqrt(eps);
  // e^{-a} sinh(a) = (1 - e^{-2a}) / 2
  return 3.0 / 64.0 * (-0.5 * std::expm1(-2.0 * a)) / (eps + 1.0);
}

double k_slow(double eps, const QuadratureConfig& cfg) {
  if (!(eps >= 0.0)) throw DomainError("k_slow: eps must be >= 0, got " + std::to_string(eps));
  if (eps < detail::zero_eps_branch) return k_zero_limit(cfg);
  const double suppression = -std::expm1(-2.0 * pi / std::sqrt(eps));
  return 128.0 / (3.0 * suppression) * j_integral(eps, cfg);
}

double t_slow(double eps, const QuadratureConfig& cfg) { return 14.0 / 9.0 * k_slow(eps, cfg); }

double t_slow_approx(double eps) {
  if (!(eps >= 0.0)) throw DomainError("t_slow_approx: eps must be >= 0");
  return 14.0 / 9.0 / (eps + 1.0);
}

double g_factor(double eps) {
  if (!(eps >= 0.0)) throw DomainError("g_factor: eps must be >= 0");
  return eps / (eps + 1.0);
}

std::vector<SlowSpectrumPoint> t_slow_table(std::span<const double> eps_grid,
                                            const QuadratureConfig& cfg) {
  std::vector<SlowSpectrumPoint> out(eps_grid.size());
  parallel_for(eps_grid.size(), [&](std::size_t i) {
    const double e = eps_grid[i];
    out[i] = {e, t_slow(e, cfg), t_slow_approx(e), g_factor(e)};
  });
  return out;
}

}  // namespace pairion::slow
