#pragma once

// Unit system: hbar = c = 1, energies and momenta in units of the electron
// rest mass m, cross sections in units of alpha * r_e^2 (= alpha^3 / m^2).
// Conversions to keV / MeV / millibarn only happen at the I/O boundary.

#include <string>
#include <vector>

namespace pairion {

namespace constants {

// CODATA 2018 recommended values.
inline constexpr double alpha = 1.0 / 137.035999084;
inline constexpr double m_keV = 510.99895000;
inline constexpr double hbar_c_MeV_fm = 197.3269804;

inline constexpr double pi = 3.14159265358979323846;

// alpha * r_e^2 = alpha^3 (hbar c / m)^2; 1 fm^2 = 10 mb.
inline constexpr double alpha_re2_mb =
    alpha * alpha * alpha * (hbar_c_MeV_fm / (m_keV * 1e-3)) *
    (hbar_c_MeV_fm / (m_keV * 1e-3)) * 10.0;

inline constexpr const char* source = "CODATA 2018";

}  // namespace constants

/// Dimensionless energy in units of the electron rest mass.
struct EnergyValue {
  double value = 0.0;

  static constexpr EnergyValue from_keV(double keV) { return {keV / constants::m_keV}; }
  static constexpr EnergyValue from_MeV(double MeV) { return {MeV * 1e3 / constants::m_keV}; }
  static constexpr EnergyValue from_eV(double eV) { return {eV * 1e-3 / constants::m_keV}; }

  constexpr double keV() const { return value * constants::m_keV; }
  constexpr double MeV() const { return value * constants::m_keV * 1e-3; }
  constexpr double eV() const { return value * constants::m_keV * 1e3; }

  friend constexpr auto operator<=>(EnergyValue, EnergyValue) = default;
};

/// Cross section in units of alpha * r_e^2.
struct CrossSectionValue {
  double value = 0.0;

  friend constexpr auto operator<=>(CrossSectionValue, CrossSectionValue) = default;
};

/// One bound state: occupancy and binding energy.
struct ShellSpec {
  std::string label;
  int n_b = 1;
  EnergyValue binding;
};

struct AtomSpec {
  int Z = 1;
  std::vector<ShellSpec> shells;

  /// Throws DomainError on I_b <= 0, n_b < 1, or sum n_b > Z.
  void validate() const;
};

/// K-shell binding of a hydrogenlike ion, I = (alpha Z)^2 / 2 in units of m.
EnergyValue hydrogenlike_binding(int Z);

double to_millibarn(CrossSectionValue s);
CrossSectionValue from_millibarn(double mb);

}  // namespace pairion
