// Copyright 2026 The be Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "barenblatt.hpp"
#include "csv.hpp"
#include "errors.hpp"
#include "pme.hpp"

namespace be {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Configuration plumbing
// ---------------------------------------------------------------------------

std::string resolve_output_dir(const ExperimentConfig& config, const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("BE_OUTPUT_DIR"); env != nullptr && env[0] != '\0') {
    return env;
  }
  return config.output_dir;
}

std::vector<double> geometric_output_times(double t0, double t_end, double ratio) {
  if (!(ratio > 1.0)) throw std::invalid_argument("snapshot ratio must be > 1");
  if (!(t_end > t0)) throw std::invalid_argument("t_end must exceed t0");
  const double tol = 1e-9 * std::max(1.0, std::abs(t_end));
  std::vector<double> times{t0};
  for (int k = 1;; ++k) {
    const double t = (1.0 + t0) * std::pow(ratio, k) - 1.0;
    if (!(t < t_end - tol)) break;
    times.push_back(t);
  }
  times.push_back(t_end);
  return times;
}

namespace {

auto kind_from_string(const std::string& name) -> InitialKind {
  if (name == "barenblatt") return InitialKind::kBarenblatt;
  if (name == "perturbed_barenblatt") return InitialKind::kPerturbedBarenblatt;
  if (name == "two_bumps") return InitialKind::kTwoBumps;
  if (name == "riemann") return InitialKind::kRiemann;
  if (name == "table") return InitialKind::kTable;
  throw std::invalid_argument("unknown initial data kind '" + name + "'");
}

auto load_table(const std::string& path) -> std::vector<std::array<double, 3>> {
  const CsvTable table = read_csv(path);
  const std::size_t ix = table.column("x");
  const std::size_t ir = table.column("rho");
  const std::size_t im = table.column("mom");
  std::vector<std::array<double, 3>> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) out.push_back({row[ix], row[ir], row[im]});
  return out;
}

auto compact_number(double v) -> std::string {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

auto snapshot_name(const char* stem, std::size_t index) -> std::string {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%03zu.csv", stem, index);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

void write_manifest(const std::string& path, const ordered_json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

auto config_json(const ExperimentConfig& c) -> ordered_json {
  ordered_json j;
  j["mode"] = c.mode;
  j["gamma"] = c.gamma;
  j["lambda"] = c.lambda;
  j["mass"] = c.mass;
  j["cells"] = c.cells;
  j["t_end"] = c.t_end;
  j["initial_kind"] = c.initial_kind;
  j["seed"] = c.seed;
  return j;
}

}  // namespace

SolverConfig build_solver_config(const ExperimentConfig& c) {
  SolverConfig sc{.gas = GasLaw(c.gamma), .damping = DampingLaw(c.lambda)};
  sc.cfl = c.cfl;
  sc.t_end = c.t_end;
  sc.dry_threshold = c.dry_threshold;
  sc.max_dt = c.max_dt;
  sc.boundary = Boundary::kZeroFlux;

  InitialData init;
  init.kind = kind_from_string(c.initial_kind);
  init.t0 = c.initial_t0;
  init.amplitude = c.initial_amplitude;
  init.centers = c.initial_centers;
  init.widths = c.initial_widths;
  init.heights = c.initial_heights;
  init.rho_left = c.initial_rho_left;
  init.u_left = c.initial_u_left;
  init.rho_right = c.initial_rho_right;
  init.u_right = c.initial_u_right;
  if (init.kind == InitialKind::kTable) init.table = load_table(c.initial_table);
  if (c.seed != 0) {
    std::mt19937 gen(static_cast<std::mt19937::result_type>(c.seed));
    std::uniform_real_distribution<double> dist(0.0, 2.0 * M_PI);
    init.phase = dist(gen);
  }

  // Mass estimate used for grid sizing and the perturbation wavelength.  Each
  // cos^2 bump of height h and half-width w carries mass h * w exactly.
  double mass_estimate = c.mass;
  double initial_extent = 0.0;
  if (init.kind == InitialKind::kTwoBumps) {
    mass_estimate = 0.0;
    for (std::size_t b = 0; b < init.centers.size(); ++b) {
      mass_estimate += init.heights[b] * init.widths[b];
      initial_extent = std::max(initial_extent, std::abs(init.centers[b]) + init.widths[b]);
    }
  }

  const bool profile_based = init.kind == InitialKind::kBarenblatt ||
                             init.kind == InitialKind::kPerturbedBarenblatt;
  sc.mass = profile_based ? c.mass : 0.0;

  double half_width = c.domain_half_width;
  if (half_width <= 0.0) {
    if (init.kind == InitialKind::kRiemann || init.kind == InitialKind::kTable) {
      throw std::invalid_argument("domain_half_width must be given for this initial data kind");
    }
    const auto sizing =
        BarenblattProfile::from_mass(sc.gas, sc.damping, mass_estimate);
    if (profile_based) initial_extent = sizing.support_radius(init.t0);
    half_width =
        c.domain_half_width_factor * std::max(sizing.support_radius(c.t_end), initial_extent);
    if (init.kind == InitialKind::kPerturbedBarenblatt && c.initial_wavelength <= 0.0) {
      init.wavelength = sizing.support_radius(init.t0);
    } else {
      init.wavelength = c.initial_wavelength;
    }
  } else {
    init.wavelength = c.initial_wavelength;
    if (init.kind == InitialKind::kPerturbedBarenblatt && init.wavelength <= 0.0) {
      init.wavelength = BarenblattProfile::from_mass(sc.gas, sc.damping, c.mass)
                            .support_radius(init.t0);
    }
  }
  sc.grid = Grid::symmetric(half_width, c.cells);
  sc.initial = init;
  sc.output_times = geometric_output_times(init.t0, c.t_end, c.snapshot_ratio);
  return sc;
}

// ---------------------------------------------------------------------------
// Hyperbolic runs
// ---------------------------------------------------------------------------

RunArtifacts execute_run(const ExperimentConfig& config, const std::string& directory) {
  fs::create_directories(directory);
  const SolverConfig sc = build_solver_config(config);
  const RunResult res = run(sc);

  RunArtifacts art;
  art.directory = directory;

  write_text(directory + "/resolved-config.txt", format_config(config));
  art.files.push_back("resolved-config.txt");

  const std::vector<std::string> diag_header{
      "t",       "dt",       "mass",  "mom_total", "energy",  "tilde_eta_total", "l1_gap",
      "lgp1_gap", "y_l2",    "y_linf", "min_rho",  "max_rho", "max_abs_u"};
  std::vector<std::vector<double>> diag_rows;
  diag_rows.reserve(res.diagnostics.size());
  for (const auto& d : res.diagnostics) {
    diag_rows.push_back({d.t, d.dt, d.mass, d.mom_total, d.energy, d.tilde_eta_total, d.l1_gap,
                         d.lgp1_gap, d.y_l2, d.y_linf, d.min_rho, d.max_rho, d.max_abs_u});
  }
  write_csv(directory + "/diagnostics.csv", diag_header, diag_rows);
  art.files.push_back("diagnostics.csv");

  ordered_json snapshots = ordered_json::array();
  const Grid& g = sc.grid;
  for (std::size_t k = 0; k < res.snapshots.size(); ++k) {
    const FieldState& s = res.snapshots[k];
    std::vector<std::vector<double>> rows;
    rows.reserve(g.n_cells);
    for (std::size_t i = 0; i < g.n_cells; ++i) {
      rows.push_back({g.center(i), s.rho[i], s.mom[i]});
    }
    const std::string name = snapshot_name("snapshot", k);
    write_csv(directory + "/" + name, {"x", "rho", "mom"}, rows);
    art.files.push_back(name);
    snapshots.push_back({{"file", name}, {"t", s.t}});
  }

  ordered_json manifest = config_json(config);
  manifest["grid"] = {{"cells", g.n_cells}, {"half_width", g.x_right()}, {"dx", g.dx}};
  manifest["files"] = {{"config", "resolved-config.txt"},
                       {"diagnostics", "diagnostics.csv"},
                       {"snapshots", snapshots}};
  manifest["summary"] = {{"n_steps", res.n_steps},
                         {"t_final", res.t_final},
                         {"mass_initial", res.mass_initial},
                         {"max_mass_drift", res.max_mass_drift},
                         {"max_w_excess", res.max_w_excess},
                         {"max_z_excess", res.max_z_excess},
                         {"worst_energy_budget_slack", res.worst_energy_budget_slack},
                         {"worst_tilde_budget_slack", res.worst_tilde_budget_slack},
                         {"boundary_rho_max", res.boundary_rho_max},
                         {"reference_mass", res.reference_mass}};
  write_manifest(directory + "/manifest.json", manifest);
  art.files.push_back("manifest.json");
  return art;
}

// ---------------------------------------------------------------------------
// Porous-medium runs
// ---------------------------------------------------------------------------

RunArtifacts execute_pme(const ExperimentConfig& config, const std::string& directory) {
  fs::create_directories(directory);
  const SolverConfig sc = build_solver_config(config);

  // Reuse the hyperbolic initial-data realization (and its discrete-mass
  // reference profile); the porous-medium march only keeps the density.
  EulerSolver seed(sc);
  PmeRun pr{sc.gas, sc.damping, sc.grid, seed.state().rho,
            rescale_time(sc.damping, sc.initial.t0)};
  if (!seed.reference().has_value()) {
    throw std::invalid_argument("porous-medium mode needs initial data with positive mass");
  }
  const BarenblattProfile& ref = *seed.reference();

  RunArtifacts art;
  art.directory = directory;
  write_text(directory + "/resolved-config.txt", format_config(config));
  art.files.push_back("resolved-config.txt");

  const Grid& g = sc.grid;
  ordered_json snapshots = ordered_json::array();
  std::vector<std::vector<double>> diag_rows;
  for (std::size_t k = 0; k < sc.output_times.size(); ++k) {
    const double t = sc.output_times[k];
    pme_advance_to(pr, rescale_time(sc.damping, t));

    std::vector<std::vector<double>> rows;
    rows.reserve(g.n_cells);
    for (std::size_t i = 0; i < g.n_cells; ++i) rows.push_back({g.center(i), pr.rho[i]});
    const std::string name = snapshot_name("pme_snapshot", k);
    write_csv(directory + "/" + name, {"x", "rho"}, rows);
    art.files.push_back(name);
    snapshots.push_back({{"file", name}, {"t", t}});

    const std::vector<double> bar = ref.cell_averages(g, t);
    double mass = 0.0, l1 = 0.0, linf = 0.0;
    for (std::size_t i = 0; i < g.n_cells; ++i) {
      mass += pr.rho[i];
      const double d = std::abs(pr.rho[i] - bar[i]);
      l1 += d;
      linf = std::max(linf, d);
    }
    diag_rows.push_back({t, pr.tau, mass * g.dx, l1 * g.dx, linf});
  }
  write_csv(directory + "/pme_diagnostics.csv", {"t", "tau", "mass", "l1_gap", "linf_gap"},
            diag_rows);
  art.files.push_back("pme_diagnostics.csv");

  ordered_json manifest = config_json(config);
  manifest["grid"] = {{"cells", g.n_cells}, {"half_width", g.x_right()}, {"dx", g.dx}};
  manifest["files"] = {{"config", "resolved-config.txt"},
                       {"diagnostics", "pme_diagnostics.csv"},
                       {"snapshots", snapshots}};
  manifest["summary"] = {{"reference_mass", ref.mass()}, {"tau_final", pr.tau}};
  write_manifest(directory + "/manifest.json", manifest);
  art.files.push_back("manifest.json");
  return art;
}

// ---------------------------------------------------------------------------
// Dispatch and sweeps
// ---------------------------------------------------------------------------

RunArtifacts execute(const ExperimentConfig& config, const std::string& override_dir) {
  const std::string base = resolve_output_dir(config, override_dir);
  const bool sweep = !config.sweep_gamma.empty() || !config.sweep_lambda.empty();
  if (!sweep) {
    return config.mode == "pme" ? execute_pme(config, base) : execute_run(config, base);
  }

  const std::vector<double> gammas =
      config.sweep_gamma.empty() ? std::vector<double>{config.gamma} : config.sweep_gamma;
  const std::vector<double> lambdas =
      config.sweep_lambda.empty() ? std::vector<double>{config.lambda} : config.sweep_lambda;

  fs::create_directories(base);
  RunArtifacts art;
  art.directory = base;
  ordered_json runs = ordered_json::array();
  for (double g : gammas) {
    for (double l : lambdas) {
      ExperimentConfig child = config;
      child.gamma = g;
      child.lambda = l;
      child.sweep_gamma.clear();
      child.sweep_lambda.clear();
      const std::string sub = "g" + compact_number(g) + "_l" + compact_number(l);
      const RunArtifacts child_art =
          child.mode == "pme" ? execute_pme(child, base + "/" + sub)
                              : execute_run(child, base + "/" + sub);
      for (const auto& f : child_art.files) art.files.push_back(sub + "/" + f);
      runs.push_back({{"gamma", g}, {"lambda", l}, {"directory", sub}});
    }
  }
  ordered_json manifest;
  manifest["mode"] = config.mode;
  manifest["sweep"] = true;
  manifest["runs"] = runs;
  write_manifest(base + "/manifest.json", manifest);
  art.files.push_back("manifest.json");
  return art;
}

// ---------------------------------------------------------------------------
// Profile emission and decay fits
// ---------------------------------------------------------------------------

void emit_barenblatt_csv(double gamma, double lambda, double mass, double time,
                         std::size_t samples, const std::string& path) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  const auto profile =
      BarenblattProfile::from_mass(GasLaw(gamma), DampingLaw(lambda), mass);
  const double span = 1.1 * profile.support_radius(time);
  std::vector<std::vector<double>> rows;
  rows.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x =
        -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(samples - 1);
    rows.push_back({x, profile.density(x, time), profile.momentum(x, time)});
  }
  write_csv(path, {"x", "rho", "mom"}, rows);
}

DecayFit fit_decay_csv(const std::string& csv_path, const std::string& column, double t_start,
                       double t_end) {
  const CsvTable table = read_csv(csv_path);
  return fit_decay(table.column_values("t"), table.column_values(column), t_start, t_end);
}

}  // namespace be
