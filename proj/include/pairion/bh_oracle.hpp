#pragma once

// Small-recoil slice of pair production in a Coulomb field. Integrating the
// Bethe-Heitler distribution over the positron variables at fixed small
// recoil q gives (14/9) alpha r_e^2 Z^2 dq^2 / q^2; this module recovers the
// 14/9 numerically.

#include "pairion/quadrature.hpp"
#include "pairion/units.hpp"

namespace pairion::bh {

struct BHKinematics {
  double delta_minus = 0.0;  // p_et / m
  double delta_plus = 0.0;   // p_pt / m
  double phi = 0.0;          // angle between the transverse momenta
  double E_e = 0.0;
  double E_p = 0.0;
  double omega = 0.0;        // E_e + E_p
  double q = 0.0;
  double t = 0.0;            // |p_et - p_pt| / q

  /// Leading-order kinematics at small q: p_et = p_pt + t q and
  /// pi - phi = q sqrt(1 - t^2) / p_pt.
  static BHKinematics from_small_q(double delta_plus, double t, double q, double E_e, double E_p);

  /// Throws DomainError on E_e + E_p != omega, t outside [0, 1] or negative deltas.
  void validate() const;
};

/// Full transverse-momentum function H.
double h_full(const BHKinematics& k);

/// q^2 / (1 + d^2)^2 (Lambda + 4 d^2 t^2 / (1 + d^2)^2), d = delta_plus,
/// Lambda = (E_e^2 + E_p^2) / (2 E_e E_p).
double h_reduced(double delta_plus, double t, double q, double E_e, double E_p);

/// (8 / (pi omega^3)) int dE_p E_e E_p int 2 d dd int_0^1 dt / sqrt(1 - t^2) H / q^2
/// over E_p in (0, omega), d = delta_plus in (0, inf). Expected 14/9.
/// The measure is the exact image of d^2 p_et at fixed p_pt: both signs of
/// p_et - p_pt and of pi - phi give the factor 4 on dq^2 dt / (2 sqrt(1 - t^2)).
double coefficient_14_9(EnergyValue omega, const QuadratureConfig& cfg = {});

}  // namespace pairion::bh
