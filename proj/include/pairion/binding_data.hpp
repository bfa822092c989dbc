#pragma once

// Tabulated binding energies for the comparison cases (X-ray levels and outer
// s electrons). JSON layout:
//
//   { "Ag": { "K": { "n_b": 2, "I_b_keV": 25.514, "source": "..." } }, ... }

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "pairion/units.hpp"

namespace pairion {

struct BindingEntry {
  std::string element;
  std::string shell;
  int n_b = 1;
  EnergyValue binding;
  std::string source;
};

class BindingTable {
 public:
  static BindingTable load(const std::filesystem::path& path);

  /// $PAIRION_BINDING_DATA when set, otherwise the file shipped in data/.
  static BindingTable load_default();
  static std::filesystem::path default_path();

  /// Shells matching the selector. A selector that is not a stored shell
  /// but prefixes stored ones ("L" for L1, L2, L3) selects the whole group.
  std::vector<ShellSpec> shells(const std::string& element, const std::string& selector) const;

  const BindingEntry& entry(const std::string& element, const std::string& shell) const;
  std::vector<std::string> elements() const;

 private:
  std::map<std::string, std::map<std::string, BindingEntry>> data_;
};

}  // namespace pairion
