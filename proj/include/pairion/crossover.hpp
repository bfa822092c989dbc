#pragma once

// Photon energy omega_0 above which pair-assisted ionization beats Compton
// scattering as a way of producing the ion: n_C sigma_C(omega_0) = sigma.

#include <string>
#include <vector>

#include "pairion/units.hpp"

namespace pairion::crossover {

enum class Mode { single_electron_ion, neutral_atom_Z_electrons, named_shell };

std::string to_string(Mode mode);

struct CrossoverResult {
  EnergyValue omega0;
  CrossSectionValue sigma_at_crossover;  // the target sigma
  Mode mode = Mode::single_electron_ion;
  int Z = 0;
  int n_compton = 1;
  std::string warning;
};

/// High-energy asymptote of the Compton cross section per electron,
/// pi r_e^2 (ln 2y + 1/2) / y with y = omega / m, in units of alpha r_e^2.
/// Rejects omega <= m.
CrossSectionValue sigma_compton(EnergyValue omega);

/// Below this photon energy (units of m) the Compton asymptote is poor.
inline constexpr double compton_asymptotic_min = 10.0;

/// Root of n_C sigma_C(omega) = target on omega in [10 m, 10^6 m].
CrossoverResult omega0_for(CrossSectionValue target, int n_compton,
                           Mode mode = Mode::named_shell);

struct CurveOptions {
  double C = 1.3;
  bool computed_C = false;  // use big_c(Z) instead of the fixed C
};

/// Ion mode: hydrogenlike K shell, one electron for Compton. Atom mode: the
/// K shell (n_b = 2 for Z >= 2) against Z free electrons.
std::vector<CrossoverResult> omega0_curve(int Z_min, int Z_max, Mode mode,
                                          const CurveOptions& options = {});

/// Atom described by an explicit shell list (all shells), Z Compton electrons.
CrossoverResult omega0_for_atom(const AtomSpec& atom, double C = 1.3);

}  // namespace pairion::crossover
