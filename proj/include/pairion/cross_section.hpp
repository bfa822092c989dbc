#pragma once

// Total cross sections. In the logarithmic approximation
//
//   sigma = (14/9) n_b alpha r_e^2 (ln(m / I_b) + C),   C = c_s + c_f,
//
// with c_s collecting the Coulomb correction of the slow sector and c_f the
// finite part of the fast-sector integral. All values in units of alpha r_e^2.

#include <optional>
#include <string>
#include <vector>

#include "pairion/binding_data.hpp"
#include "pairion/quadrature.hpp"
#include "pairion/units.hpp"

namespace pairion::xsec {

inline constexpr double leading_coefficient = 14.0 / 9.0;
inline constexpr double default_C = 1.3;

struct SlowConstant {
  double raw = 0.0;     // int_0^inf (K - 1/(1+eps)) d eps, the value entering C
  double scaled = 0.0;  // (14/9) raw, i.e. int (T_s - T~_s) d eps
};

SlowConstant compute_c_s(const QuadratureConfig& cfg = {});

/// c_s (raw convention) computed once with default tolerances.
double c_s();

/// c_f(Z, U) = (9/14) int_0^U T~_f(x) dx - ln(m / I); U in units of m,
/// unbounded when not given.
double compute_c_f(int Z, std::optional<EnergyValue> upper = std::nullopt,
                   const QuadratureConfig& cfg = {});

/// Same constant obtained by splitting at eps0: T_s below, T~_f above.
double compute_c_f_split(int Z, EnergyValue eps0, std::optional<EnergyValue> upper = std::nullopt,
                         const QuadratureConfig& cfg = {});

/// C(Z) = c_s + c_f(Z, infinity).
double big_c(int Z, const QuadratureConfig& cfg = {});

struct KShellIonResult {
  CrossSectionValue sigma;
  double C = 0.0;
  std::string warning;  // set when Z is above the validated range
};

/// Ground state of a single-electron ion: (14/9)(ln(2/(alpha Z)^2) + C),
/// C = big_c(Z) unless given.
KShellIonResult sigma_kshell_ion(int Z, std::optional<double> C = std::nullopt);

inline constexpr int validated_max_Z = 50;

/// One bound state with n_b electrons and binding I_b (units of m).
CrossSectionValue sigma_state(EnergyValue I_b, int n_b, double C = default_C);

/// Sum of sigma_state over the listed shells.
CrossSectionValue sigma_shells(const std::vector<ShellSpec>& shells, double C = default_C);

enum class FastSector { matched, bare };

struct CrossSectionBreakdown {
  CrossSectionValue sigma_s;
  CrossSectionValue sigma_f;
  CrossSectionValue sigma_total;
  double c_s = 0.0;
  double c_f = 0.0;
  double C = 0.0;
  EnergyValue eps0;
  std::optional<EnergyValue> upper_limit;
  std::string warning;
};

/// sigma_s = int_0^eps0 T_s, sigma_f = int_eps0^omega T~_f (or bare T_f).
CrossSectionBreakdown sigma_split(int Z, EnergyValue eps0,
                                  std::optional<EnergyValue> omega = std::nullopt,
                                  FastSector fast = FastSector::matched,
                                  const QuadratureConfig& cfg = {});

struct ExperimentComparison {
  std::string label;
  double computed_mb = 0.0;
  double measured_mb = 0.0;
  double measured_err_mb = 0.0;
};

/// Ag K, Au K and Au L against the measured values.
std::vector<ExperimentComparison> experiment_comparison(const BindingTable& table,
                                                        double C = default_C);

}  // namespace pairion::xsec
