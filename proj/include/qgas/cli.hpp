#pragma once

// Command-line front end. `run` is separate from main() so tests can drive
// it in-process with captured streams.
//
// Exit codes: 0 success, 1 domain/physics error (or failed verification),
// 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgas/errors.hpp"
#include "qgas/oracle.hpp"
#include "qgas/thermo.hpp"
#include "qgas/trap.hpp"

namespace qgas::cli {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ formatting

inline std::string format_number(double v, int precision) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

/// Single-line JSON with ", " / ": " separators and fixed significant digits.
inline void write_json(std::ostream& os, const Json& j, int precision) {
  switch (j.type()) {
    case Json::value_t::object: {
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ", ";
        first = false;
        os << Json(it.key()).dump() << ": ";
        write_json(os, it.value(), precision);
      }
      os << '}';
      break;
    }
    case Json::value_t::array: {
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        write_json(os, j[i], precision);
      }
      os << ']';
      break;
    }
    case Json::value_t::number_float:
      os << format_number(j.get<double>(), precision);
      break;
    default:
      os << j.dump();
  }
}

inline std::string csv_cell(const Json& j, int precision) {
  if (j.is_number_float()) return format_number(j.get<double>(), precision);
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

/// Header row plus data rows. `rows` is an array of flat objects with identical keys.
inline void write_csv(std::ostream& os, const Json& rows, int precision) {
  if (rows.empty()) return;
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    os << (first ? "" : ",") << it.key();
    first = false;
  }
  os << '\n';
  for (const auto& row : rows) {
    first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      os << (first ? "" : ",") << csv_cell(it.value(), precision);
      first = false;
    }
    os << '\n';
  }
}

// --------------------------------------------------------------- config

/// Flat `key = value` file; '#' starts a comment. Keys are long flag names
/// without the leading dashes. Values already given on the command line win.
inline std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config requires a path");
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (!path) return args;
  std::ifstream in(*path);
  if (!in) throw UsageError("--config: cannot open " + *path);

  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };

  std::vector<std::string> merged = args;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("--config: line " + std::to_string(lineno) + " is not key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") throw UsageError("--config: bad key on line " + std::to_string(lineno));
    if (given(key)) continue;
    if (value == "true") {
      merged.push_back("--" + key);
    } else if (value != "false") {
      merged.push_back("--" + key);
      merged.push_back(value);
    }
  }
  return merged;
}

// -------------------------------------------------------------- commands

struct Flags {
  double dim = 0.0;
  std::string exponent;
  double strength = 0.0;
  double particles = 0.0;
  double density = 0.0;
  double temperature = 0.0;
  double mu = 0.0;
  double t_over_tb = 0.0;
  double energy = 0.0;
  double emin = 0.0;
  double emax = 0.0;
  double mass = 1.0;
  double hbar = 1.0;
  std::string stat = "fermi";
  std::string format;
  std::string rmax = "auto";
  std::string config;
  int points = 200;
  int precision = 11;
  bool space = false;
  bool momentum = false;

  CLI::Option* dim_opt = nullptr;
  CLI::Option* exponent_opt = nullptr;
  CLI::Option* strength_opt = nullptr;
  CLI::Option* particles_opt = nullptr;
  CLI::Option* density_opt = nullptr;
  CLI::Option* temperature_opt = nullptr;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* t_over_tb_opt = nullptr;
  CLI::Option* energy_opt = nullptr;
  CLI::Option* emin_opt = nullptr;
  CLI::Option* emax_opt = nullptr;
  CLI::Option* points_opt = nullptr;
};

inline bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

inline std::optional<double> parse_exponent(const std::string& text) {
  if (text == "box") return std::nullopt;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("--exponent: expected a positive number or 'box', got '" + text + "'");
  }
  if (used != text.size()) throw UsageError("--exponent: expected a positive number or 'box', got '" + text + "'");
  return v;
}

inline Statistics parse_stat(const std::string& text) {
  if (text == "fermi") return Statistics::fermi;
  if (text == "bose") return Statistics::bose;
  throw UsageError("--stat: expected 'fermi' or 'bose', got '" + text + "'");
}

inline Json units_block(const Flags& f) {
  Json u;
  u["hbar"] = f.hbar;
  u["mass"] = f.mass;
  u["k_B"] = 1.0;
  u["convention"] = "reduced";
  return u;
}

/// Trap from --dim/--exponent/--A, enforcing the box rules.
inline Trap build_trap(const Flags& f, Json& params, bool needs_strength) {
  const auto n = parse_exponent(f.exponent);
  params["dim"] = f.dim;
  if (!n) {
    if (given(f.strength_opt)) throw UsageError("--A is not allowed with --exponent box");
    params["exponent"] = "box";
    return Trap::box(f.dim, f.mass, f.hbar);
  }
  params["exponent"] = *n;
  if (given(f.density_opt)) throw UsageError("--density applies only to --exponent box; use --N");
  if (!needs_strength) {
    // Geometry-only commands accept any A; default to 1 for the object.
    const double a = given(f.strength_opt) ? f.strength : 1.0;
    if (given(f.strength_opt)) params["A"] = a;
    return Trap::power_law(f.dim, *n, a, f.mass, f.hbar);
  }
  if (!given(f.strength_opt)) throw UsageError("--A is required for a power-law trap");
  params["A"] = f.strength;
  return Trap::power_law(f.dim, *n, f.strength, f.mass, f.hbar);
}

/// Particle number: --N for power-law traps, --density * V_D for the box.
inline double resolve_particles(const Flags& f, const Trap& trap, Json& params) {
  if (trap.is_box()) {
    if (!given(f.density_opt)) throw UsageError("--density is required with --exponent box");
    if (given(f.particles_opt)) throw UsageError("--N is not allowed with --exponent box; use --density");
    params["density"] = f.density;
    if (!(f.density > 0.0)) throw DomainError("density must be > 0");
    return f.density * ball_volume(trap.dim());
  }
  if (!given(f.particles_opt)) throw UsageError("--N is required");
  params["N"] = f.particles;
  return f.particles;
}

struct Output {
  Json object;         // JSON result (params appended last)
  Json rows;           // CSV rows
  bool table = false;  // true when the natural form is tabular (defaults to CSV)
  int exit_code = 0;
};

inline Output cmd_feasibility(const Flags& f, Json& params) {
  const Trap trap = build_trap(f, params, false);
  Output o;
  o.object["feasible"] = bec_feasible(trap);
  o.object["gamma"] = trap.gamma();
  o.rows = Json::array({o.object});
  return o;
}

inline Output cmd_condensed_fraction(const Flags& f, Json& params) {
  Output o;
  if (given(f.t_over_tb_opt)) {
    const Trap trap = build_trap(f, params, false);
    params["t_over_tb"] = f.t_over_tb;
    o.object["condensed_fraction"] = condensed_fraction_ratio(trap.gamma(), f.t_over_tb);
  } else {
    if (!given(f.temperature_opt)) throw UsageError("condensed-fraction needs --t-over-tb or --T");
    const Trap trap = build_trap(f, params, true);
    const GasSpec gas{Statistics::bose, resolve_particles(f, trap, params), trap};
    params["T"] = f.temperature;
    const auto split = condensed_fraction(gas, f.temperature);
    o.object["condensed_fraction"] = split.condensed / gas.particles;
    o.object["condensed"] = split.condensed;
    o.object["thermal"] = split.thermal;
    o.object["bec_temperature"] = *split.bec_temperature;
  }
  o.rows = Json::array({o.object});
  return o;
}

inline Output cmd_fermi_energy(const Flags& f, Json& params) {
  const Trap trap = build_trap(f, params, true);
  const GasSpec gas{Statistics::fermi, resolve_particles(f, trap, params), trap};
  const double ef = trap.is_box() ? box_fermi_energy(trap.dim(), f.density, f.mass, f.hbar) : fermi_energy(gas);
  Output o;
  o.object["fermi_energy"] = ef;
  o.object["fermi_temperature"] = ef;
  o.object["gamma"] = trap.gamma();
  o.rows = Json::array({o.object});
  return o;
}

inline Output cmd_bec_temperature(const Flags& f, Json& params) {
  const Trap trap = build_trap(f, params, true);
  const GasSpec gas{Statistics::bose, resolve_particles(f, trap, params), trap};
  const auto tb = trap.is_box() ? box_bec_temperature(trap.dim(), f.density, f.mass, f.hbar) : bec_temperature(gas);
  Output o;
  o.object["feasible"] = tb.has_value();
  o.object["gamma"] = trap.gamma();
  o.object["bec_temperature"] = tb ? Json(*tb) : Json(nullptr);
  o.rows = Json::array({o.object});
  return o;
}

inline Output cmd_dos(const Flags& f, Json& params) {
  const Trap trap = build_trap(f, params, true);
  const auto dos = density_of_states(trap);
  Output o;
  auto row = [&](double e) {
    Json r;
    r["energy"] = e;
    r["dos"] = dos(e);
    r["counting"] = dos.counting(e);
    return r;
  };
  if (given(f.energy_opt)) {
    params["energy"] = f.energy;
    o.object = row(f.energy);
    o.object["gamma"] = dos.gamma;
    o.object["prefactor"] = dos.prefactor;
    o.rows = Json::array({row(f.energy)});
    return o;
  }
  if (!given(f.emax_opt)) throw UsageError("dos needs --energy or --emax (with optional --emin, --points)");
  const double lo = given(f.emin_opt) ? f.emin : f.emax / f.points;
  if (!(lo > 0.0 && f.emax > lo)) throw DomainError("dos grid requires 0 < emin < emax");
  params["emin"] = lo;
  params["emax"] = f.emax;
  params["points"] = f.points;
  if (f.points < 2) throw UsageError("--points must be >= 2");
  o.table = true;
  o.rows = Json::array();
  for (int i = 0; i < f.points; ++i) o.rows.push_back(row(lo + (f.emax - lo) * i / (f.points - 1)));
  o.object["gamma"] = dos.gamma;
  o.object["prefactor"] = dos.prefactor;
  o.object["rows"] = o.rows;
  return o;
}

inline Output cmd_solve_mu(const Flags& f, Json& params) {
  const Statistics stats = parse_stat(f.stat);
  params["statistics"] = std::string(to_string(stats));
  const Trap trap = build_trap(f, params, true);
  const GasSpec gas{stats, resolve_particles(f, trap, params), trap};
  if (!given(f.temperature_opt)) throw UsageError("--T is required");
  params["T"] = f.temperature;
  const auto sol = solve_mu(gas, f.temperature);
  Output o;
  o.object["mu"] = sol.state.mu;
  o.object["log_fugacity"] = sol.state.log_fugacity();
  o.object["fugacity"] = sol.state.fugacity();
  if (sol.split) {
    o.object["thermal_number"] = sol.split->thermal;
    o.object["condensed_number"] = sol.split->condensed;
    o.object["bec_temperature"] = sol.split->bec_temperature ? Json(*sol.split->bec_temperature) : Json(nullptr);
  } else {
    o.object["thermal_number"] = total_number(gas, sol.state);
    o.object["condensed_number"] = 0.0;
  }
  o.rows = Json::array({o.object});
  return o;
}

inline Output cmd_profile(const Flags& f, Json& params) {
  if (f.space == f.momentum) throw UsageError("profile needs exactly one of --space or --momentum");
  const Statistics stats = parse_stat(f.stat);
  params["statistics"] = std::string(to_string(stats));
  params["space"] = f.space ? "position" : "momentum";
  const ProfileSpace space = f.space ? ProfileSpace::position : ProfileSpace::momentum;
  const Trap trap = build_trap(f, params, true);
  const GasSpec gas{stats, resolve_particles(f, trap, params), trap};
  if (!given(f.temperature_opt)) throw UsageError("--T is required (0 selects the zero-temperature Fermi profile)");
  params["T"] = f.temperature;
  params["points"] = f.points;

  std::optional<double> grid_max;
  if (f.rmax != "auto") {
    std::size_t used = 0;
    try {
      grid_max = std::stod(f.rmax, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != f.rmax.size() || !grid_max) throw UsageError("--rmax: expected a number or 'auto'");
  }

  Output o;
  o.table = true;
  Profile prof;
  if (f.temperature == 0.0) {
    if (stats != Statistics::fermi) throw DomainError("T = 0 profiles require FERMI statistics");
    const double ef = fermi_energy(gas);
    if (!grid_max) grid_max = 1.25 * support_edge(trap, space, ef);
    prof = zero_temperature_profile(gas, ef, space, *grid_max, f.points);
    o.object["fermi_energy"] = ef;
  } else {
    ThermoState state{f.temperature, 0.0};
    if (given(f.mu_opt)) {
      state.mu = f.mu;
      params["mu"] = f.mu;
    } else {
      state = solve_mu(gas, f.temperature).state;
    }
    if (!grid_max) grid_max = support_edge(trap, space, std::max(state.mu, 0.0) + 10.0 * state.temperature);
    prof = finite_temperature_profile(gas, state, space, *grid_max, f.points);
    o.object["mu"] = state.mu;
  }
  params["rmax"] = *grid_max;
  o.object["normalization"] = prof.normalization;
  const char* axis = f.space ? "r" : "p";
  o.object[axis] = prof.grid;
  o.object["density"] = prof.density;
  o.rows = Json::array();
  for (std::size_t i = 0; i < prof.grid.size(); ++i) {
    Json r;
    r[axis] = prof.grid[i];
    r["density"] = prof.density[i];
    o.rows.push_back(std::move(r));
  }
  return o;
}

inline Output cmd_verify(const Flags&, Json&) {
  Output o;
  o.table = true;
  o.rows = Json::array();
  bool all = true;
  for (const auto& rep : oracle::run_verification_suite()) {
    Json r;
    r["name"] = rep.name;
    r["closed_form"] = rep.closed_form;
    r["oracle"] = rep.oracle;
    r["abs_err"] = rep.abs_error();
    r["rel_err"] = rep.rel_error();
    r["tolerance"] = rep.tolerance;
    r["pass"] = rep.passed();
    all = all && rep.passed();
    o.rows.push_back(std::move(r));
  }
  o.object["all_passed"] = all;
  o.object["reports"] = o.rows;
  o.exit_code = all ? 0 : 1;
  return o;
}

// ------------------------------------------------------------------ run

inline int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiclassical ideal Fermi and Bose gases in power-law traps U(r) = A r^n.\n"
               "Reduced units: hbar = m = k_B = 1 unless --mass / --hbar-scale are given."};
  app.name("qgas");
  app.require_subcommand(1);
  Flags f;

  std::string chosen;
  auto common = [&](CLI::App* sub, bool geometry) {
    if (geometry) {
      sub->add_option("--dim", f.dim, "space dimension D > 0 (real)")->required();
      sub->add_option("--exponent", f.exponent, "power-law exponent n > 0, or 'box'")->required();
    }
    sub->add_option("--mass", f.mass, "particle mass (default 1)");
    sub->add_option("--hbar-scale", f.hbar, "value of hbar (default 1)");
    sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--precision", f.precision, "significant digits in output (default 11)")
        ->check(CLI::Range(1, 17));
    sub->add_option("--config", f.config, "flat key=value file; command-line flags take precedence");
    sub->callback([&chosen, sub] { chosen = sub->get_name(); });
  };
  auto strength_opt = [&](CLI::App* sub) {
    return sub->add_option("--A", f.strength, "trap strength A > 0 (energy / length^n)");
  };

  // The same Flags fields back every subcommand; only one subcommand runs.
  auto* feas = app.add_subcommand("feasibility", "BEC feasibility D/2 + D/n > 1");
  common(feas, true);
  auto* feas_a = strength_opt(feas);

  auto* cf = app.add_subcommand("condensed-fraction", "condensed fraction N0/N below T_B");
  common(cf, true);
  auto* cf_a = strength_opt(cf);
  auto* cf_ttb = cf->add_option("--t-over-tb", f.t_over_tb, "temperature in units of T_B");
  auto* cf_t = cf->add_option("--T", f.temperature, "temperature");
  auto* cf_n = cf->add_option("--N", f.particles, "particle number");
  auto* cf_d = cf->add_option("--density", f.density, "box density (with --exponent box)");

  auto* fe = app.add_subcommand("fermi-energy", "Fermi energy E_F = k T_F");
  common(fe, true);
  auto* fe_a = strength_opt(fe);
  auto* fe_n = fe->add_option("--N", f.particles, "particle number");
  auto* fe_d = fe->add_option("--density", f.density, "box density (with --exponent box)");

  auto* bt = app.add_subcommand("bec-temperature", "BEC transition temperature k T_B");
  common(bt, true);
  auto* bt_a = strength_opt(bt);
  auto* bt_n = bt->add_option("--N", f.particles, "particle number");
  auto* bt_d = bt->add_option("--density", f.density, "box density (with --exponent box)");

  auto* dos = app.add_subcommand("dos", "density of states and counting function");
  common(dos, true);
  auto* dos_a = strength_opt(dos);
  auto* dos_e = dos->add_option("--energy", f.energy, "single energy");
  auto* dos_lo = dos->add_option("--emin", f.emin, "grid start");
  auto* dos_hi = dos->add_option("--emax", f.emax, "grid end");
  auto* dos_pts = dos->add_option("--points", f.points, "grid points (default 200)");

  auto* sm = app.add_subcommand("solve-mu", "chemical potential from the particle number");
  common(sm, true);
  auto* sm_a = strength_opt(sm);
  sm->add_option("--stat", f.stat, "fermi or bose")->required();
  auto* sm_t = sm->add_option("--T", f.temperature, "temperature > 0")->required();
  auto* sm_n = sm->add_option("--N", f.particles, "particle number");
  auto* sm_d = sm->add_option("--density", f.density, "box density (with --exponent box)");

  auto* pr = app.add_subcommand("profile", "spatial or momentum density profile");
  common(pr, true);
  auto* pr_a = strength_opt(pr);
  pr->add_flag("--space", f.space, "position-space density n(r)");
  pr->add_flag("--momentum", f.momentum, "momentum-space density n(p)");
  pr->add_option("--stat", f.stat, "fermi or bose")->required();
  auto* pr_t = pr->add_option("--T", f.temperature, "temperature; 0 gives the T = 0 Fermi profile")->required();
  auto* pr_mu = pr->add_option("--mu", f.mu, "chemical potential (default: solved from N)");
  auto* pr_n = pr->add_option("--N", f.particles, "particle number");
  auto* pr_d = pr->add_option("--density", f.density, "box density (with --exponent box)");
  pr->add_option("--rmax", f.rmax, "grid extent or 'auto'");
  pr->add_option("--points", f.points, "grid points (default 200)");

  auto* ver = app.add_subcommand("verify", "run the oracle cross-check suite");
  common(ver, false);

  std::vector<std::string> args;
  try {
    args = merge_config(raw_args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  std::vector<const char*> argv{"qgas"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  struct Binding {
    CLI::Option *a, *n, *d, *t, *mu, *ttb, *e, *elo, *ehi, *pts;
  };
  Binding b{};
  if (chosen == "feasibility") b = {feas_a, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
  if (chosen == "condensed-fraction") b = {cf_a, cf_n, cf_d, cf_t, nullptr, cf_ttb, nullptr, nullptr, nullptr, nullptr};
  if (chosen == "fermi-energy") b = {fe_a, fe_n, fe_d, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
  if (chosen == "bec-temperature") b = {bt_a, bt_n, bt_d, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
  if (chosen == "dos") b = {dos_a, nullptr, nullptr, nullptr, nullptr, nullptr, dos_e, dos_lo, dos_hi, dos_pts};
  if (chosen == "solve-mu") b = {sm_a, sm_n, sm_d, sm_t, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
  if (chosen == "profile") b = {pr_a, pr_n, pr_d, pr_t, pr_mu, nullptr, nullptr, nullptr, nullptr, nullptr};
  f.strength_opt = b.a;
  f.particles_opt = b.n;
  f.density_opt = b.d;
  f.temperature_opt = b.t;
  f.mu_opt = b.mu;
  f.t_over_tb_opt = b.ttb;
  f.energy_opt = b.e;
  f.emin_opt = b.elo;
  f.emax_opt = b.ehi;
  f.points_opt = b.pts;

  const std::map<std::string, std::function<Output(const Flags&, Json&)>> commands = {
      {"feasibility", cmd_feasibility},       {"condensed-fraction", cmd_condensed_fraction},
      {"fermi-energy", cmd_fermi_energy},     {"bec-temperature", cmd_bec_temperature},
      {"dos", cmd_dos},                       {"solve-mu", cmd_solve_mu},
      {"profile", cmd_profile},               {"verify", cmd_verify},
  };

  Json params;
  params["command"] = chosen;
  Output result;
  try {
    result = commands.at(chosen)(f, params);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  params["units"] = units_block(f);

  const std::string format = f.format.empty() ? (result.table ? "csv" : "json") : f.format;
  if (format == "csv") {
    write_csv(out, result.rows, f.precision);
  } else {
    Json obj = result.object;
    obj["params"] = params;
    write_json(out, obj, f.precision);
    out << '\n';
  }
  return result.exit_code;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace qgas::cli
