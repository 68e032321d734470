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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "barenblatt.hpp"
#include "entropy.hpp"
#include "gas.hpp"

namespace be {

enum class InitialKind {
  kBarenblatt,           // exact profile with its equilibrium momentum
  kPerturbedBarenblatt,  // profile density times (1 + a sin(...)), zero momentum
  kTwoBumps,             // sum of cos^2 bumps, zero momentum
  kRiemann,              // two constant states split at x = 0
  kTable,                // (x, rho, mom) samples, linearly interpolated
};

struct InitialData {
  InitialKind kind = InitialKind::kBarenblatt;
  double t0 = 0.0;
  // perturbed profile
  double amplitude = 0.0;
  double wavelength = 1.0;
  double phase = 0.0;
  // bumps
  std::vector<double> centers;
  std::vector<double> widths;
  std::vector<double> heights;
  // Riemann states
  double rho_left = 1.0, u_left = 0.0;
  double rho_right = 0.125, u_right = 0.0;
  // table samples (x ascending)
  std::vector<std::array<double, 3>> table;
};

// kZeroFlux: reflecting walls (mirror ghost state, identically zero mass
// flux); kPeriodic: wrap-around.
enum class Boundary { kZeroFlux, kPeriodic };

struct SolverConfig {
  GasLaw gas;
  DampingLaw damping;
  Grid grid;
  double cfl = 0.45;
  double t_end = 0.0;
  std::vector<double> output_times;  // ascending, in [t0, t_end]
  double dry_threshold = 1e-12;
  double max_dt = 0.0;  // 0 disables the cap
  double mass = 0.0;    // profile mass for Barenblatt-type initial data
  InitialData initial;
  Boundary boundary = Boundary::kZeroFlux;
};

struct Flux2 {
  double mass;
  double momentum;
};

// Physical flux (m, m^2/rho + p) under the vacuum convention.
Flux2 physical_flux(const GasLaw& gas, double rho, double m,
                    double dry_threshold);

// Local Lax-Friedrichs interface flux with signal speed
// a = max(|u_L| + c_L, |u_R| + c_R); a vacuum side contributes zero.
Flux2 numerical_flux(const GasLaw& gas, double rho_l, double m_l, double rho_r,
                     double m_r, double dry_threshold);

// Exact multiplier of the friction substep over [t0, t0+dt]:
//   exp(-((1+t0+dt)^{1-lambda} - (1+t0)^{1-lambda}) / (1-lambda)).
// Satisfies the semigroup identity in t0, dt.
double damping_factor(const DampingLaw& damping, double t0, double dt);

// One diagnostics row, emitted at each requested output time.
struct DiagRow {
  double t;
  double dt;        // step size of the step that crossed this time
  double mass;
  double mom_total;
  double energy;            // sum of mechanical energy * dx
  double tilde_eta_total;   // sum of the high-moment entropy * dx
  double l1_gap;            // ||rho - rho_bar||_1
  double lgp1_gap;          // ||rho - rho_bar||_{gamma+1}^{gamma+1}
  double y_l2;              // L^2 norm of the gap antiderivative
  double y_linf;
  double min_rho;
  double max_rho;
  double max_abs_u;
};

struct RunResult {
  std::vector<FieldState> snapshots;
  std::vector<DiagRow> diagnostics;
  std::size_t n_steps = 0;
  double t_final = 0.0;
  double mass_initial = 0.0;
  double max_mass_drift = 0.0;  // relative to the initial mass
  // Riemann-invariant envelope of the initial data and the worst excursions
  // beyond it observed after any step.
  double w_max0 = 0.0;
  double z_min0 = 0.0;
  double max_w_excess = 0.0;
  double max_z_excess = 0.0;
  // Worst relative slack of the two entropy budgets over all steps:
  //   (energy(t) + friction dissipation(t) - energy(t0)) / energy(t0)
  // and the analogue for the high-moment entropy with its two dissipation
  // integrals.  Nonpositive values mean the budgets hold with room to spare.
  double worst_energy_budget_slack = 0.0;
  double worst_tilde_budget_slack = 0.0;
  double boundary_rho_max = 0.0;
  bool has_reference = false;
  double reference_mass = 0.0;
};

// Godunov-split march: Lax-Friedrichs hyperbolic substep at the CFL-limited
// step, then the exact friction multiplier, then momentum removal from dry
// cells.  Snapshots and diagnostics are linearly interpolated in time between
// the bracketing steps.
class EulerSolver {
 public:
  explicit EulerSolver(const SolverConfig& config);

  const FieldState& state() const { return state_; }
  FieldState& mutable_state() { return state_; }
  const SolverConfig& config() const { return config_; }
  const std::optional<BarenblattProfile>& reference() const {
    return reference_;
  }

  // Advances one split step, at most dt_limit; returns the dt taken.
  double step(double dt_limit);
  // CFL-limited step size for the current state (may be +inf for vacuum).
  double suggest_dt() const;

  double initial_mass() const { return mass_initial_; }
  double initial_energy() const { return energy_initial_; }
  double initial_tilde_eta() const { return tilde_initial_; }

  // Monitors, updated after every step.
  double max_mass_drift() const { return max_mass_drift_; }
  double w_max0() const { return w_max0_; }
  double z_min0() const { return z_min0_; }
  double max_w_excess() const { return max_w_excess_; }
  double max_z_excess() const { return max_z_excess_; }
  double worst_energy_budget_slack() const { return worst_energy_slack_; }
  double worst_tilde_budget_slack() const { return worst_tilde_slack_; }
  double boundary_rho_max() const { return boundary_rho_max_; }
  double friction_dissipation() const { return d_energy_; }
  double tilde_m2_dissipation() const { return d_m2_; }
  double tilde_remainder_dissipation() const { return d_rem_; }
  double current_energy() const { return energy_now_; }
  double current_tilde_eta() const { return tilde_now_; }

  // Totals of the current state (one pass; used by diagnostics).
  double total_mass() const;
  // Sum of the high-moment entropy times dx over an arbitrary state on the
  // solver's grid (fast kernel path).
  double tilde_eta_total_of(const FieldState& s) const;

 private:
  void realize_initial_data();
  void init_monitors();

  SolverConfig config_;
  FieldState state_;
  std::optional<BarenblattProfile> profile_;    // initial-data profile
  std::optional<BarenblattProfile> reference_;  // gap reference (discrete mass)
  std::vector<QuadNode> kernel_rule_;
  EntropyConstants consts_;
  // Closed even-moment coefficients of the entropy kernel when the generator
  // exponent is an integer (exact); empty otherwise.
  std::vector<double> moment_coef_;
  int generator_exponent_ = 0;

  double tilde_eta_cell(double rho, double mom) const;

  double mass_initial_ = 0.0;
  double energy_initial_ = 0.0;
  double tilde_initial_ = 0.0;
  double energy_now_ = 0.0;
  double tilde_now_ = 0.0;
  double d_energy_ = 0.0;
  double d_m2_ = 0.0;
  double d_rem_ = 0.0;
  double max_mass_drift_ = 0.0;
  double w_max0_ = 0.0;
  double z_min0_ = 0.0;
  double max_w_excess_ = 0.0;
  double max_z_excess_ = 0.0;
  double worst_energy_slack_ = 0.0;
  double worst_tilde_slack_ = 0.0;
  double boundary_rho_max_ = 0.0;
};

// Runs the configured experiment to t_end and collects snapshots plus
// diagnostics at config.output_times.
RunResult run(const SolverConfig& config);

}  // namespace be
