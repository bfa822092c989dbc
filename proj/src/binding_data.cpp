#include "pairion/binding_data.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "pairion/errors.hpp"

#ifndef PAIRION_DEFAULT_BINDING_FILE
#define PAIRION_DEFAULT_BINDING_FILE "data/binding_energies.json"
#endif

namespace pairion {

BindingTable BindingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open binding-energy file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed binding-energy file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error(path.string() + ": top level must be an object");

  BindingTable table;
  for (const auto& [element, shells] : doc.items()) {
    if (!shells.is_object())
      throw std::runtime_error(path.string() + ": entry for " + element + " must be an object");
    for (const auto& [shell, rec] : shells.items()) {
      BindingEntry e;
      e.element = element;
      e.shell = shell;
      try {
        e.n_b = rec.at("n_b").get<int>();
        e.binding = EnergyValue::from_keV(rec.at("I_b_keV").get<double>());
        e.source = rec.value("source", "");
      } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error(path.string() + ": " + element + "/" + shell + ": " + ex.what());
      }
      if (e.n_b < 1 || !(e.binding.value > 0.0))
        throw DomainError(path.string() + ": " + element + "/" + shell + " needs n_b >= 1 and I_b > 0");
      table.data_[element][shell] = std::move(e);
    }
  }
  return table;
}

std::filesystem::path BindingTable::default_path() {
  if (const char* env = std::getenv("PAIRION_BINDING_DATA"); env && *env) return env;
  return PAIRION_DEFAULT_BINDING_FILE;
}

BindingTable BindingTable::load_default() { return load(default_path()); }

const BindingEntry& BindingTable::entry(const std::string& element, const std::string& shell) const {
  const auto el = data_.find(element);
  if (el == data_.end()) throw DomainError("no binding data for element " + element);
  const auto sh = el->second.find(shell);
  if (sh == el->second.end()) throw DomainError("no binding data for " + element + " shell " + shell);
  return sh->second;
}

std::vector<ShellSpec> BindingTable::shells(const std::string& element,
                                            const std::string& selector) const {
  const auto el = data_.find(element);
  if (el == data_.end()) throw DomainError("no binding data for element " + element);
  std::vector<ShellSpec> out;
  if (auto exact = el->second.find(selector); exact != el->second.end()) {
    out.push_back({exact->first, exact->second.n_b, exact->second.binding});
    return out;
  }
  for (const auto& [name, e] : el->second)
    if (name.starts_with(selector)) out.push_back({name, e.n_b, e.binding});
  if (out.empty()) throw DomainError("no binding data for " + element + " shell " + selector);
  return out;
}

std::vector<std::string> BindingTable::elements() const {
  std::vector<std::string> out;
  for (const auto& [name, shells] : data_) out.push_back(name);
  return out;
}

}  // namespace pairion
