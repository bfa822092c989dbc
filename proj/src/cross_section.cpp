#include "pairion/cross_section.hpp"

#include <cmath>

#include "pairion/errors.hpp"
#include "pairion/fast_spectrum.hpp"
#include "pairion/slow_spectrum.hpp"

namespace pairion::xsec {

namespace {

// Past this point K - 1/(1+eps) ~ eps^-3.5 is far below quadrature noise of K.
constexpr double c_s_cutoff = 1000.0;

double check_binding(int Z) {
  if (Z < 1) throw DomainError("Z must be >= 1, got " + std::to_string(Z));
  if (!(constants::alpha * Z < 1.0)) throw DomainError("Z must satisfy alpha Z < 1");
  return hydrogenlike_binding(Z).value;
}

// int over x in [lo, upper] of T_f(x) g(x / I), or bare T_f.
double fast_integral(double I, double lo, std::optional<EnergyValue> upper, FastSector fast,
                     const QuadratureConfig& cfg) {
  auto f = [I, fast](double x) {
    const double t = fast::t_fast(x);
    return fast == FastSector::matched ? t * slow::g_factor(x / I) : t;
  };
  const double hi = upper ? upper->value : infinity;
  if (!(hi > lo)) throw DomainError("fast-sector upper limit must exceed the lower one");
  std::vector<double> pts{lo};
  for (double p : {I, 10.0 * I, 0.05, 0.2, 1.0, 10.0, 50.0, 1000.0})
    if (p > pts.back() * (1.0 + 1e-12) && p < hi) pts.push_back(p);
  pts.push_back(hi);
  return integrate(f, std::span<const double>(pts), cfg).value;
}

// int_0^e T_s(eps) d eps
double slow_integral(double e, const QuadratureConfig& cfg) {
  auto f = [&cfg](double eps) { return slow::t_slow(eps, cfg); };
  std::vector<double> pts{0.0};
  for (double p : {1.0, 5.0, 20.0, 100.0, 1000.0, 1e4, 1e5})
    if (p < e) pts.push_back(p);
  pts.push_back(e);
  return integrate(f, std::span<const double>(pts), cfg).value;
}

}  // namespace

SlowConstant compute_c_s(const QuadratureConfig& cfg) {
  auto d = [&cfg](double eps) { return slow::k_slow(eps, cfg) - 1.0 / (1.0 + eps); };
  const double body =
      integrate(d, {0.0, 0.5, 1.0, 2.0, 5.0, 20.0, 100.0, c_s_cutoff}, cfg).value;
  // Power-law tail d ~ eps^-3.5 continued from the cutoff.
  const double tail = d(c_s_cutoff) * c_s_cutoff / 2.5;
  const double raw = body + tail;
  return {raw, leading_coefficient * raw};
}

double c_s() {
  static const double value = compute_c_s().raw;
  return value;
}

double compute_c_f(int Z, std::optional<EnergyValue> upper, const QuadratureConfig& cfg) {
  const double I = check_binding(Z);
  return fast_integral(I, 0.0, upper, FastSector::matched, cfg) / leading_coefficient -
         std::log(1.0 / I);
}

double compute_c_f_split(int Z, EnergyValue eps0, std::optional<EnergyValue> upper,
                         const QuadratureConfig& cfg) {
  return sigma_split(Z, eps0, upper, FastSector::matched, cfg).c_f;
}

double big_c(int Z, const QuadratureConfig& cfg) { return c_s() + compute_c_f(Z, std::nullopt, cfg); }

KShellIonResult sigma_kshell_ion(int Z, std::optional<double> C) {
  const double I = check_binding(Z);
  KShellIonResult r;
  r.C = C ? *C : big_c(Z);
  r.sigma = {leading_coefficient * (std::log(1.0 / I) + r.C)};
  if (Z > validated_max_Z)
    r.warning = "Z = " + std::to_string(Z) + " is above the validated range (alpha Z)^2 << 1, Z <= " +
                std::to_string(validated_max_Z);
  return r;
}

CrossSectionValue sigma_state(EnergyValue I_b, int n_b, double C) {
  if (!(I_b.value > 0.0 && I_b.value < 1.0))
    throw DomainError("sigma_state: I_b must lie in (0, m)");
  if (n_b < 1) throw DomainError("sigma_state: n_b must be >= 1");
  return {leading_coefficient * n_b * (std::log(1.0 / I_b.value) + C)};
}

CrossSectionValue sigma_shells(const std::vector<ShellSpec>& shells, double C) {
  double total = 0.0;
  for (const auto& s : shells) total += sigma_state(s.binding, s.n_b, C).value;
  return {total};
}

CrossSectionBreakdown sigma_split(int Z, EnergyValue eps0, std::optional<EnergyValue> omega,
                                  FastSector fast, const QuadratureConfig& cfg) {
  const double I = check_binding(Z);
  if (!(eps0.value > 0.0)) throw DomainError("sigma_split: eps0 must be > 0");
  if (omega && !(omega->value > eps0.value))
    throw DomainError("sigma_split: omega must exceed eps0");

  CrossSectionBreakdown b;
  b.eps0 = eps0;
  b.upper_limit = omega;
  if (!(eps0.value > I && eps0.value < 1.0))
    b.warning = "eps0 is outside the overlap region (I, m)";
  b.sigma_s = {slow_integral(eps0.value / I, cfg)};
  b.sigma_f = {fast_integral(I, eps0.value, omega, fast, cfg)};
  b.sigma_total = {b.sigma_s.value + b.sigma_f.value};
  b.c_s = c_s();
  b.C = b.sigma_total.value / leading_coefficient - std::log(1.0 / I);
  b.c_f = b.C - b.c_s;
  return b;
}

std::vector<ExperimentComparison> experiment_comparison(const BindingTable& table, double C) {
  struct Measured {
    const char* label;
    const char* element;
    const char* shell;
    double value;
    double error;
  };
  static constexpr Measured measured[] = {
      {"Ag K", "Ag", "K", 18.0, 6.0},
      {"Au K", "Au", "K", 8.3, 6.2},
      {"Au L", "Au", "L", 116.0, 76.0},
  };
  std::vector<ExperimentComparison> out;
  for (const auto& m : measured) {
    const auto sigma = sigma_shells(table.shells(m.element, m.shell), C);
    out.push_back({m.label, to_millibarn(sigma), m.value, m.error});
  }
  return out;
}

}  // namespace pairion::xsec
