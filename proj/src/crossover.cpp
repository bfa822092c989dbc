#include "pairion/crossover.hpp"

#include <cmath>

#include "pairion/cross_section.hpp"
#include "pairion/errors.hpp"
#include "pairion/parallel.hpp"
#include "pairion/quadrature.hpp"

namespace pairion::crossover {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::single_electron_ion: return "ion";
    case Mode::neutral_atom_Z_electrons: return "atom";
    case Mode::named_shell: return "shell";
  }
  return "?";
}

CrossSectionValue sigma_compton(EnergyValue omega) {
  const double y = omega.value;
  if (!(y > 1.0)) throw DomainError("sigma_compton: omega must exceed m");
  return {constants::pi / constants::alpha * (std::log(2.0 * y) + 0.5) / y};
}

CrossoverResult omega0_for(CrossSectionValue target, int n_compton, Mode mode) {
  if (!(target.value > 0.0)) throw DomainError("omega0_for: target must be > 0");
  if (n_compton < 1) throw DomainError("omega0_for: need at least one Compton electron");
  const double lo = std::log(compton_asymptotic_min);
  const double hi = std::log(1e6);
  auto f = [&](double u) {
    return n_compton * sigma_compton({std::exp(u)}).value / target.value - 1.0;
  };
  double u0 = 0.0;
  try {
    u0 = find_root(f, lo, hi, 1e-14);
  } catch (const BracketError&) {
    throw BracketError("omega0_for: n_C sigma_C - sigma has no sign change for omega in [10 m, 1e6 m] (target " +
                       std::to_string(target.value) + " alpha r_e^2, n_C = " +
                       std::to_string(n_compton) + ")");
  }
  if (std::abs(f(u0)) > 1e-8)
    throw BracketError("omega0_for: root refinement did not reach 1e-8 relative residual");
  CrossoverResult r;
  r.omega0 = {std::exp(u0)};
  r.sigma_at_crossover = target;
  r.mode = mode;
  r.n_compton = n_compton;
  return r;
}

std::vector<CrossoverResult> omega0_curve(int Z_min, int Z_max, Mode mode, const CurveOptions& options) {
  if (Z_min < 1 || Z_max > xsec::validated_max_Z || Z_min > Z_max)
    throw DomainError("omega0_curve: Z range must lie within [1, 50]");
  if (mode == Mode::named_shell) throw DomainError("omega0_curve: use ion or atom mode");
  const auto n = static_cast<std::size_t>(Z_max - Z_min + 1);
  std::vector<CrossoverResult> out(n);
  parallel_for(n, [&](std::size_t i) {
    const int Z = Z_min + static_cast<int>(i);
    const double C = options.computed_C ? xsec::big_c(Z) : options.C;
    const EnergyValue I = hydrogenlike_binding(Z);
    CrossoverResult r;
    if (mode == Mode::single_electron_ion) {
      r = omega0_for(xsec::sigma_state(I, 1, C), 1, mode);
    } else {
      r = omega0_for(xsec::sigma_state(I, Z >= 2 ? 2 : 1, C), Z, mode);
    }
    r.Z = Z;
    out[i] = r;
  }, 1);
  return out;
}

CrossoverResult omega0_for_atom(const AtomSpec& atom, double C) {
  atom.validate();
  auto r = omega0_for(xsec::sigma_shells(atom.shells, C), atom.Z, Mode::neutral_atom_Z_electrons);
  r.Z = atom.Z;
  return r;
}

}  // namespace pairion::crossover
