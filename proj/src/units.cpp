#include "pairion/units.hpp"

#include <cmath>
#include <string>

#include "pairion/errors.hpp"

namespace pairion {

void AtomSpec::validate() const {
  if (Z < 1) throw DomainError("AtomSpec: Z must be >= 1, got " + std::to_string(Z));
  int total = 0;
  for (const auto& s : shells) {
    if (s.n_b < 1) throw DomainError("AtomSpec: shell " + s.label + " has n_b < 1");
    if (!(s.binding.value > 0.0))
      throw DomainError("AtomSpec: shell " + s.label + " has non-positive binding energy");
    total += s.n_b;
  }
  if (total > Z)
    throw DomainError("AtomSpec: " + std::to_string(total) + " electrons exceed Z = " +
                      std::to_string(Z));
}

EnergyValue hydrogenlike_binding(int Z) {
  if (Z < 1) throw DomainError("hydrogenlike_binding: Z must be >= 1, got " + std::to_string(Z));
  const double az = constants::alpha * Z;
  return {0.5 * az * az};
}

double to_millibarn(CrossSectionValue s) { return s.value * constants::alpha_re2_mb; }

CrossSectionValue from_millibarn(double mb) { return {mb / constants::alpha_re2_mb}; }

}  // namespace pairion
