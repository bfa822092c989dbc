#include "pairion/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairion/binding_data.hpp"
#include "pairion/bh_oracle.hpp"
#include "pairion/cross_section.hpp"
#include "pairion/crossover.hpp"
#include "pairion/errors.hpp"
#include "pairion/fast_spectrum.hpp"
#include "pairion/matching.hpp"
#include "pairion/slow_spectrum.hpp"

namespace pairion::cli {

namespace {

using Cell = std::variant<double, std::string>;
using json = nlohmann::json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += '\n';
  }
  return out;
}

json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  return std::get<std::string>(c);
}

json constants_json() {
  return {{"alpha", constants::alpha},
          {"m_keV", constants::m_keV},
          {"alpha_re2_mb", constants::alpha_re2_mb},
          {"source", constants::source}};
}

struct Output {
  std::string format = "csv";
  std::string path;
};

struct Emitter {
  std::ostream& out;

  void write_text(const std::string& text, const std::string& path) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  }

  void emit(const std::string& command, const json& inputs, const json& units, const Table& t,
            const Output& o, const std::vector<std::string>& warnings = {}) const {
    if (o.format == "json") {
      json rows = json::array();
      for (const auto& row : t.rows) {
        json r = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(r));
      }
      json doc = {{"command", command}, {"inputs", inputs},   {"units", units},
                  {"values", rows},     {"constants", constants_json()}, {"warnings", warnings}};
      write_text(doc.dump(2) + "\n", o.path);
      return;
    }
    write_text(to_csv(t), o.path);
  }
};

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  bool log = false;
};

std::vector<double> make_grid(const GridSpec& g) {
  if (!(g.min < g.max)) throw DomainError("grid: min must be < max");
  if (g.points < 2) throw DomainError("grid: need at least 2 points");
  if (g.log && !(g.min > 0.0)) throw DomainError("grid: log spacing needs min > 0");
  std::vector<double> out(static_cast<std::size_t>(g.points));
  for (int i = 0; i < g.points; ++i) {
    const double f = static_cast<double>(i) / (g.points - 1);
    out[static_cast<std::size_t>(i)] =
        g.log ? std::exp(std::log(g.min) + f * (std::log(g.max) - std::log(g.min)))
              : g.min + f * (g.max - g.min);
  }
  out.back() = g.max;
  return out;
}

json grid_json(const GridSpec& g) {
  return {{"min", g.min}, {"max", g.max}, {"points", g.points}, {"log", g.log}};
}

// ---- spectra ---------------------------------------------------------------

Table fast_table(const std::vector<double>& xs) {
  Table t{{"eps2_over_m", "T_f_dimensionless"}, {}};
  for (const auto& p : fast::t_fast_table(xs)) t.rows.push_back({p.x, p.t_f});
  return t;
}

Table slow_table(const std::vector<double>& eps, const QuadratureConfig& cfg) {
  Table t{{"eps2_over_I", "T_s_dimensionless", "T_s_approx_dimensionless", "g_dimensionless",
           "rel_dev_approx"},
          {}};
  for (const auto& p : slow::t_slow_table(eps, cfg))
    t.rows.push_back({p.eps, p.t_s, p.t_s_approx, p.g, (p.t_s_approx - p.t_s) / p.t_s});
  return t;
}

Table matched_table(int Z, const std::vector<double>& xs, const QuadratureConfig& cfg,
                    json& meta) {
  const auto rep = matching::overlap_report(Z, xs, cfg);
  meta = {{"Z", Z}, {"alpha_Z", rep.alpha_Z}, {"I_over_m", rep.binding.value},
          {"I_keV", rep.binding.keV()}, {"x_at_I", rep.x_at_binding}};
  Table t{{"eps2_over_m", "T_f_dimensionless", "T_f_matched_dimensionless",
           "T_s_scaled_dimensionless", "rel_gap_matched", "rel_gap_bare"},
          {}};
  for (const auto& p : rep.points)
    t.rows.push_back({p.eps2.value, p.t_f, p.t_f_matched, p.t_s_scaled, p.rel_gap, p.rel_gap_bare});
  return t;
}

Table crossover_curve_table(int zmin, int zmax, const crossover::CurveOptions& opts) {
  const auto ion = crossover::omega0_curve(zmin, zmax, crossover::Mode::single_electron_ion, opts);
  const auto atom = crossover::omega0_curve(zmin, zmax, crossover::Mode::neutral_atom_Z_electrons, opts);
  Table t{{"Z", "omega0_ion_MeV", "omega0_atom_MeV", "sigma_ion_alpha_re2", "sigma_atom_alpha_re2"}, {}};
  for (std::size_t i = 0; i < ion.size(); ++i)
    t.rows.push_back({static_cast<double>(ion[i].Z), ion[i].omega0.MeV(), atom[i].omega0.MeV(),
                      ion[i].sigma_at_crossover.value, atom[i].sigma_at_crossover.value});
  return t;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pairion: ionization by high-energy photons accompanied by e+e- pair creation"};
  app.require_subcommand(1);

  Output output;
  double rel_tol = 1e-10;
  std::string binding_file;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", output.path, "Write to this file instead of stdout");
    sub->add_option("--rel-tol", rel_tol, "Relative quadrature tolerance")
        ->check(CLI::PositiveNumber);
  };

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Electron energy spectra");
  std::string spec_mode = "fast";
  GridSpec grid{1e-3, 100.0, 200, false};
  int spec_Z = 20;
  spectrum->add_option("--mode", spec_mode, "fast: T_f(x); slow: T_s(eps); matched: overlap with Z")
      ->check(CLI::IsMember({"fast", "slow", "matched"}));
  spectrum->add_option("--xmin", grid.min, "Grid start (eps2/m, or eps2/I for slow)");
  spectrum->add_option("--xmax", grid.max, "Grid end");
  spectrum->add_option("--points", grid.points, "Grid points");
  spectrum->add_flag("--log", grid.log, "Logarithmic grid");
  spectrum->add_option("--Z", spec_Z, "Nuclear charge (matched mode)")->check(CLI::Range(1, 136));
  add_common(spectrum);

  // xsection
  auto* xsection = app.add_subcommand("xsection", "Total cross sections and constants");
  int xs_Z = 0;
  std::string element;
  std::string shell;
  std::optional<double> xs_C;
  std::string units = "alpha_re2";
  bool constants_report = false;
  bool experiment = false;
  std::optional<double> eps0;
  std::optional<double> omega_cut;
  bool bare = false;
  xsection->add_option("--Z", xs_Z, "Hydrogenlike ion (K shell)")->check(CLI::Range(1, 136));
  xsection->add_option("--element", element, "Element from the binding-energy table");
  xsection->add_option("--shell", shell, "Shell or shell group (K, L, L1, 3s, ...)");
  xsection->add_option("--C", xs_C, "Override the constant C");
  xsection->add_option("--units", units, "Cross-section units")
      ->check(CLI::IsMember({"alpha_re2", "mb"}));
  xsection->add_flag("--constants", constants_report, "Report c_s, c_f and C (needs --Z)");
  xsection->add_flag("--experiment", experiment, "Compare Ag K, Au K, Au L with measurements");
  xsection->add_option("--eps0", eps0, "Split the energy integral at eps0 (units of m; needs --Z)");
  xsection->add_option("--omega", omega_cut, "Upper limit of the fast integral (units of m)");
  xsection->add_flag("--bare", bare, "Use bare T_f above eps0");
  xsection->add_option("--binding-data", binding_file, "Binding-energy JSON file");
  add_common(xsection);

  // crossover
  auto* cross = app.add_subcommand("crossover", "Photon energy where pair-assisted ionization overtakes Compton");
  int cr_Z = 0;
  int cr_Zmin = 0;
  int cr_Zmax = 0;
  std::string cr_mode = "ion";
  double cr_C = xsec::default_C;
  bool cr_computed = false;
  std::string cr_element;
  std::string cr_shell;
  int cr_compton = 0;
  cross->add_option("--Z", cr_Z, "Nuclear charge")->check(CLI::Range(1, 50));
  cross->add_option("--Zmin", cr_Zmin, "Curve start")->check(CLI::Range(1, 50));
  cross->add_option("--Zmax", cr_Zmax, "Curve end")->check(CLI::Range(1, 50));
  cross->add_option("--mode", cr_mode, "ion or atom")->check(CLI::IsMember({"ion", "atom"}));
  cross->add_option("--C", cr_C, "Constant C of the logarithmic formula");
  cross->add_flag("--computed-C", cr_computed, "Use the computed C(Z) instead of --C");
  cross->add_option("--element", cr_element, "Named shell: element");
  cross->add_option("--shell", cr_shell, "Named shell: shell or group");
  cross->add_option("--compton-electrons", cr_compton, "Electrons taking part in Compton (default n_b)");
  cross->add_option("--binding-data", binding_file, "Binding-energy JSON file");
  add_common(cross);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Internal consistency checks");
  std::string which = "all";
  oracle->add_option("--which", which, "fast, bh or all")->check(CLI::IsMember({"fast", "bh", "all"}));
  add_common(oracle);

  // figures
  auto* figures = app.add_subcommand("figures", "Write the data behind the four figures as CSV");
  std::string outdir = "figures";
  figures->add_option("--outdir", outdir, "Directory for the CSV files");
  figures->add_option("--rel-tol", rel_tol, "Relative quadrature tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  QuadratureConfig cfg = QuadratureConfig{}.with_rel_tol(rel_tol);
  // Keep the absolute floor below the requested relative accuracy.
  cfg.abs_tol = std::min(cfg.abs_tol, 1e-4 * rel_tol);
  const Emitter emitter{out};
  const json constants_units = {{"energy", "units of m (electron rest mass)"},
                                {"cross_section", units == "mb" ? "mb" : "alpha r_e^2"}};
  auto load_table = [&]() {
    return binding_file.empty() ? BindingTable::load_default() : BindingTable::load(binding_file);
  };

  try {
    if (spectrum->parsed()) {
      json inputs = {{"mode", spec_mode}, {"grid", grid_json(grid)}};
      const auto xs = make_grid(grid);
      Table t;
      if (spec_mode == "fast") {
        t = fast_table(xs);
      } else if (spec_mode == "slow") {
        t = slow_table(xs, cfg);
      } else {
        json meta;
        t = matched_table(spec_Z, xs, cfg, meta);
        inputs["metadata"] = meta;
      }
      emitter.emit("spectrum", inputs, {{"energy", spec_mode == "slow" ? "units of I" : "units of m"}},
                   t, output);
      return exit_ok;
    }

    if (xsection->parsed()) {
      const double scale = units == "mb" ? constants::alpha_re2_mb : 1.0;
      json inputs = {{"units", units}};
      std::vector<std::string> warnings;
      Table t{{"quantity", "value", "unit"}, {}};
      const std::string u = units == "mb" ? "mb" : "alpha_re2";
      if (experiment) {
        const auto table = load_table();
        const double C = xs_C.value_or(xsec::default_C);
        inputs["C"] = C;
        t = Table{{"case", "computed_mb", "measured_mb", "measured_err_mb"}, {}};
        for (const auto& c : xsec::experiment_comparison(table, C))
          t.rows.push_back({c.label, c.computed_mb, c.measured_mb, c.measured_err_mb});
      } else if (!element.empty()) {
        if (shell.empty()) throw DomainError("--element needs --shell");
        const auto table = load_table();
        const double C = xs_C.value_or(xsec::default_C);
        inputs["element"] = element;
        inputs["shell"] = shell;
        inputs["C"] = C;
        for (const auto& s : table.shells(element, shell)) {
          t.rows.push_back({"n_b_" + s.label, static_cast<double>(s.n_b), "electrons"});
          t.rows.push_back({"I_b_" + s.label, s.binding.keV(), "keV"});
          t.rows.push_back({"sigma_" + s.label, xsec::sigma_state(s.binding, s.n_b, C).value * scale, u});
        }
        t.rows.push_back({"sigma_total", xsec::sigma_shells(table.shells(element, shell), C).value * scale, u});
      } else if (xs_Z > 0) {
        inputs["Z"] = xs_Z;
        if (eps0) {
          inputs["eps0"] = *eps0;
          inputs["omega"] = omega_cut ? json(*omega_cut) : json("unbounded");
          inputs["fast_sector"] = bare ? "bare" : "matched";
          const auto b = xsec::sigma_split(xs_Z, {*eps0},
                                           omega_cut ? std::optional<EnergyValue>{{*omega_cut}} : std::nullopt,
                                           bare ? xsec::FastSector::bare : xsec::FastSector::matched, cfg);
          if (!b.warning.empty()) warnings.push_back(b.warning);
          t.rows = {{"sigma_s", b.sigma_s.value * scale, u},
                    {"sigma_f", b.sigma_f.value * scale, u},
                    {"sigma_total", b.sigma_total.value * scale, u},
                    {"c_s", b.c_s, "dimensionless"},
                    {"c_f", b.c_f, "dimensionless"},
                    {"C", b.C, "dimensionless"}};
        } else if (constants_report) {
          const auto cs = xsec::compute_c_s(cfg);
          const double cf_inf = xsec::compute_c_f(xs_Z, std::nullopt, cfg);
          t.rows = {{"c_s", cs.raw, "dimensionless"},
                    {"c_s_times_14_over_9", cs.scaled, "dimensionless"},
                    {"c_f_unbounded", cf_inf, "dimensionless"},
                    {"c_f_upper_5m", xsec::compute_c_f(xs_Z, EnergyValue{5.0}, cfg), "dimensionless"},
                    {"c_f_upper_10m", xsec::compute_c_f(xs_Z, EnergyValue{10.0}, cfg), "dimensionless"},
                    {"C", cs.raw + cf_inf, "dimensionless"}};
        } else {
          const auto r = xsec::sigma_kshell_ion(xs_Z, xs_C);
          if (!r.warning.empty()) warnings.push_back(r.warning);
          inputs["C"] = r.C;
          t.rows = {{"C", r.C, "dimensionless"},
                    {"I", hydrogenlike_binding(xs_Z).keV(), "keV"},
                    {"sigma_kshell_ion", r.sigma.value * scale, u}};
          if (xs_Z == 1)
            t.rows.push_back({"literature_hydrogen_total_inelastic", 19.0 * scale, u});
        }
      } else {
        throw DomainError("xsection needs --Z, --element/--shell or --experiment");
      }
      emitter.emit("xsection", inputs, constants_units, t, output, warnings);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      return exit_ok;
    }

    if (cross->parsed()) {
      crossover::CurveOptions opts{cr_C, cr_computed};
      json inputs = {{"C", cr_C}, {"computed_C", cr_computed}};
      Table t{{"label", "Z", "n_compton", "sigma_alpha_re2", "omega0_MeV"}, {}};
      std::vector<std::string> warnings;
      if (!cr_element.empty()) {
        if (cr_shell.empty()) throw DomainError("--element needs --shell");
        const auto shells = load_table().shells(cr_element, cr_shell);
        int n_b = 0;
        for (const auto& s : shells) n_b += s.n_b;
        const int n_c = cr_compton > 0 ? cr_compton : n_b;
        inputs["element"] = cr_element;
        inputs["shell"] = cr_shell;
        inputs["compton_electrons"] = n_c;
        const auto r = crossover::omega0_for(xsec::sigma_shells(shells, cr_C), n_c);
        t.rows.push_back({cr_element + " " + cr_shell, 0.0, static_cast<double>(n_c),
                          r.sigma_at_crossover.value, r.omega0.MeV()});
      } else {
        int zmin = cr_Zmin;
        int zmax = cr_Zmax;
        if (cr_Z > 0) zmin = zmax = cr_Z;
        if (zmin < 1 || zmax < zmin) throw DomainError("crossover needs --Z, --Zmin/--Zmax or --element/--shell");
        const auto mode = cr_mode == "ion" ? crossover::Mode::single_electron_ion
                                           : crossover::Mode::neutral_atom_Z_electrons;
        inputs["mode"] = cr_mode;
        inputs["Z_range"] = {zmin, zmax};
        for (const auto& r : crossover::omega0_curve(zmin, zmax, mode, opts))
          t.rows.push_back({cr_mode, static_cast<double>(r.Z), static_cast<double>(r.n_compton),
                            r.sigma_at_crossover.value, r.omega0.MeV()});
      }
      emitter.emit("crossover", inputs, {{"omega0", "MeV"}, {"sigma", "alpha r_e^2"}}, t, output, warnings);
      return exit_ok;
    }

    if (oracle->parsed()) {
      Table t{{"check", "argument", "value", "reference", "rel_diff"}, {}};
      if (which == "fast" || which == "all") {
        for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0}) {
          const double v = fast::t_fast(x);
          const double o = fast::t_fast_oracle(x, cfg.with_rel_tol(std::min(rel_tol, 1e-11)));
          t.rows.push_back({"t_fast_vs_quadrature", x, v, o, std::abs(v - o) / v});
        }
      }
      if (which == "bh" || which == "all") {
        for (double w : {1e4, 1e5}) {
          const double c = bh::coefficient_14_9({w}, cfg.with_rel_tol(1e-8));
          t.rows.push_back({"bh_coefficient", w, c, 14.0 / 9.0, std::abs(c - 14.0 / 9.0) / (14.0 / 9.0)});
        }
      }
      emitter.emit("oracle", {{"which", which}}, {{"argument", "x or omega in units of m"}}, t, output);
      return exit_ok;
    }

    if (figures->parsed()) {
      namespace fs = std::filesystem;
      fs::create_directories(outdir);
      auto write = [&](const std::string& name, const Table& t) {
        emitter.write_text(to_csv(t), (fs::path(outdir) / name).string());
        out << (fs::path(outdir) / name).string() << "\n";
      };
      write("fig3_fast_spectrum.csv", fast_table(make_grid({1e-3, 1e3, 241, true})));
      write("fig4_slow_spectrum.csv", slow_table(make_grid({0.0, 50.0, 201, false}), cfg));
      json meta;
      write("fig5_matching_Z20.csv", matched_table(20, make_grid({1e-3, 0.9, 181, true}), cfg, meta));
      write("fig6_crossover.csv", crossover_curve_table(1, 50, {}));
      return exit_ok;
    }
  } catch (const QuadratureError& e) {
    err << "numerical failure: " << e.what() << " (best estimate " << format_number(e.best_estimate())
        << ")\n";
    return exit_numerical;
  } catch (const BracketError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return exit_numerical;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_runtime;
  }
  return exit_ok;
}

}  // namespace pairion::cli
