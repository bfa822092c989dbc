#include "pairion/bh_oracle.hpp"

#include <cmath>

#include "pairion/errors.hpp"

namespace pairion::bh {

using constants::pi;

BHKinematics BHKinematics::from_small_q(double delta_plus, double t, double q, double E_e, double E_p) {
  BHKinematics k;
  k.delta_plus = delta_plus;
  k.delta_minus = delta_plus + t * q;
  k.phi = pi - q * std::sqrt(std::max(0.0, 1.0 - t * t)) / delta_plus;
  k.E_e = E_e;
  k.E_p = E_p;
  k.omega = E_e + E_p;
  k.q = q;
  k.t = t;
  k.validate();
  return k;
}

void BHKinematics::validate() const {
  if (!(delta_minus >= 0.0) || !(delta_plus >= 0.0))
    throw DomainError("BHKinematics: transverse momenta must be >= 0");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("BHKinematics: t must lie in [0, 1]");
  if (!(E_e > 0.0) || !(E_p > 0.0)) throw DomainError("BHKinematics: energies must be > 0");
  if (std::abs(E_e + E_p - omega) > 1e-12 * omega)
    throw DomainError("BHKinematics: E_e + E_p must equal omega");
}

double h_full(const BHKinematics& k) {
  const double dm2 = k.delta_minus * k.delta_minus;
  const double dp2 = k.delta_plus * k.delta_plus;
  const double am = 1.0 + dm2;
  const double ap = 1.0 + dp2;
  return -dm2 / (am * am) - dp2 / (ap * ap) +
         k.omega * k.omega / (2.0 * k.E_e * k.E_p) * (dm2 + dp2) / (am * ap) +
         (k.E_e / k.E_p + k.E_p / k.E_e) * k.delta_minus * k.delta_plus * std::cos(k.phi) / (am * ap);
}

double h_reduced(double delta_plus, double t, double q, double E_e, double E_p) {
  const double a = 1.0 + delta_plus * delta_plus;
  const double lambda = (E_e * E_e + E_p * E_p) / (2.0 * E_e * E_p);
  return q * q / (a * a) * (lambda + 4.0 * delta_plus * delta_plus * t * t / (a * a));
}

double coefficient_14_9(EnergyValue omega, const QuadratureConfig& cfg) {
  const double w = omega.value;
  if (!(w > 2.0)) throw DomainError("coefficient_14_9: omega must be above the pair threshold");
  // E_p = w s; t = sin(theta) turns dt / sqrt(1 - t^2) into d theta.
  auto over_theta = [&cfg](double d, double E_e, double E_p) {
    auto f = [=](double theta) { return E_e * E_p * h_reduced(d, std::sin(theta), 1.0, E_e, E_p); };
    return integrate(f, 0.0, 0.5 * pi, cfg).value;
  };
  auto over_delta = [&](double s) {
    const double E_p = w * s;
    const double E_e = w - E_p;
    auto f = [&](double d) { return 2.0 * d * over_theta(d, E_e, E_p); };
    return integrate(f, {0.0, 1.0, infinity}, cfg).value;
  };
  const double energy = integrate(over_delta, 0.0, 1.0, cfg).value;
  // dE_p = w ds
  return 8.0 / (pi * w * w * w) * w * energy;
}

}  // namespace pairion::bh
