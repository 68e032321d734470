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

#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "barenblatt.hpp"
#include "euler.hpp"

namespace be {
namespace {

// Linear-interpolated position where the density crosses `level`; the
// rightmost crossing when `rightmost`, otherwise the leftmost.
static auto crossing(const std::vector<double>& rho, const Grid& grid,
                     double level, bool rightmost) -> double {
  double pos = NAN;
  for (std::size_t i = 0; i + 1 < rho.size(); ++i) {
    const double d0 = rho[i] - level, d1 = rho[i + 1] - level;
    if (d0 * d1 < 0.0) {
      const double w = d0 / (d0 - d1);
      const double x = grid.center(i) + w * grid.dx;
      if (!rightmost) return x;
      pos = x;
    }
  }
  return pos;
}

TEST_SUITE_BEGIN("euler");

TEST_CASE("fluxes: consistency, vacuum, and the LLF spot value") {
  const GasLaw gas(2.0);
  const double dry = 1e-12;

  const Flux2 phys = physical_flux(gas, 0.8, 0.4, dry);
  CHECK(phys.mass == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(phys.momentum == doctest::Approx(0.4 * 0.5 + 0.125 * 0.64).epsilon(1e-14));
  CHECK_THROWS_AS(physical_flux(gas, -1.0, 0.0, dry), std::domain_error);

  // Equal states reduce to the physical flux exactly.
  const Flux2 num = numerical_flux(gas, 0.8, 0.4, 0.8, 0.4, dry);
  CHECK(num.mass == doctest::Approx(phys.mass).epsilon(1e-15));
  CHECK(num.momentum == doctest::Approx(phys.momentum).epsilon(1e-15));

  const Flux2 vac = numerical_flux(gas, 0.0, 0.0, 0.0, 0.0, dry);
  CHECK(vac.mass == doctest::Approx(0.0));
  CHECK(vac.momentum == doctest::Approx(0.0));

  // (1,0) against vacuum: a = 0.5, F = (0.25, 0.0625).
  const Flux2 edge = numerical_flux(gas, 1.0, 0.0, 0.0, 0.0, dry);
  CHECK(edge.mass == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(edge.momentum == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK_THROWS_AS(numerical_flux(gas, -0.1, 0.0, 1.0, 0.0, dry),
                  std::domain_error);
}

TEST_CASE("damping factor: closed forms and the semigroup identity") {
  const DampingLaw constant(0.0);
  for (double dt : {0.1, 1.0, 2.5}) {
    CHECK(damping_factor(constant, 3.0, dt) ==
          doctest::Approx(std::exp(-dt)).epsilon(1e-14));
  }
  const DampingLaw half(0.5);
  CHECK(damping_factor(half, 0.0, 3.0) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  for (double t0 : {0.0, 0.8, 4.0}) {
    for (double d1 : {0.3, 1.1}) {
      for (double d2 : {0.2, 2.0}) {
        CHECK(damping_factor(half, t0, d1 + d2) ==
              doctest::Approx(damping_factor(half, t0, d1) *
                              damping_factor(half, t0 + d1, d2))
                  .epsilon(1e-14));
      }
    }
  }
  CHECK_THROWS_AS(damping_factor(half, -1.0, 1.0), std::domain_error);
}

TEST_CASE("uniform gas at rest between reflecting walls stays at rest") {
  SolverConfig cfg{.gas = GasLaw(2.0),
                   .damping = DampingLaw(0.5),
                   .grid = Grid::symmetric(1.0, 16),
                   .t_end = 1.0,
                   .initial = InitialData{.kind = InitialKind::kRiemann,
                                          .rho_left = 0.7,
                                          .u_left = 0.0,
                                          .rho_right = 0.7,
                                          .u_right = 0.0}};
  EulerSolver solver(cfg);
  for (int k = 0; k < 5; ++k) solver.step(1.0);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(solver.state().rho[i] == 0.7);
    CHECK(solver.state().mom[i] == 0.0);
  }
  CHECK(solver.max_mass_drift() == doctest::Approx(0.0));
}

TEST_CASE("uniform moving gas under periodic wrap damps momentum exactly") {
  SolverConfig cfg{.gas = GasLaw(2.0),
                   .damping = DampingLaw(0.5),
                   .grid = Grid::symmetric(1.0, 16),
                   .t_end = 10.0,
                   .initial = InitialData{.kind = InitialKind::kRiemann,
                                          .rho_left = 1.0,
                                          .u_left = 0.3,
                                          .rho_right = 1.0,
                                          .u_right = 0.3},
                   .boundary = Boundary::kPeriodic};
  EulerSolver solver(cfg);
  double expected_m = 0.3;
  for (int k = 0; k < 4; ++k) {
    const double t_before = solver.state().t;
    const double dt = solver.step(10.0);
    expected_m *= damping_factor(cfg.damping, t_before, dt);
    for (std::size_t i = 0; i < 16; ++i) {
      CHECK(solver.state().rho[i] == 1.0);  // flux differences vanish exactly
      CHECK(solver.state().mom[i] == expected_m);
    }
    CHECK(solver.state().t == doctest::Approx(t_before + dt).epsilon(1e-15));
  }
}

TEST_CASE("suggest_dt applies the CFL fraction and max_dt caps the step") {
  SolverConfig cfg{.gas = GasLaw(2.0),
                   .damping = DampingLaw(0.5),
                   .grid = Grid::symmetric(1.0, 16),
                   .t_end = 1.0,
                   .initial = InitialData{.kind = InitialKind::kRiemann,
                                          .rho_left = 1.0,
                                          .u_left = 0.0,
                                          .rho_right = 1.0,
                                          .u_right = 0.0}};
  EulerSolver solver(cfg);
  // Sound speed is 0.5 at rho = 1, so dt = 0.45 * dx / 0.5.
  CHECK(solver.suggest_dt() == doctest::Approx(0.45 * 0.125 / 0.5).epsilon(1e-14));

  cfg.max_dt = 1e-3;
  EulerSolver capped(cfg);
  CHECK(capped.step(1.0) == doctest::Approx(1e-3).epsilon(1e-15));
  CHECK(capped.step(2.5e-4) == doctest::Approx(2.5e-4).epsilon(1e-15));
}

TEST_CASE("zero initial data produces identically zero snapshots") {
  SolverConfig cfg{.gas = GasLaw(2.0),
                   .damping = DampingLaw(0.5),
                   .grid = Grid::symmetric(2.0, 32),
                   .t_end = 1.0,
                   .output_times = {0.5, 1.0},
                   .initial = InitialData{.kind = InitialKind::kTwoBumps,
                                          .centers = {-1.0, 1.0},
                                          .widths = {0.5, 0.5},
                                          .heights = {0.0, 0.0}}};
  const RunResult res = run(cfg);
  CHECK(res.mass_initial == doctest::Approx(0.0));
  CHECK_FALSE(res.has_reference);
  CHECK(res.n_steps == 1);  // the static state advances in one stride
  REQUIRE(res.snapshots.size() == 2);
  CHECK(res.snapshots[0].t == doctest::Approx(0.5));
  CHECK(res.snapshots[1].t == doctest::Approx(1.0));
  for (const FieldState& s : res.snapshots) {
    for (std::size_t i = 0; i < s.rho.size(); ++i) {
      CHECK(s.rho[i] == 0.0);
      CHECK(s.mom[i] == 0.0);
    }
  }
}

TEST_CASE("table initial data interpolates inside and clips outside") {
  const std::vector<std::array<double, 3>> tent{
      {-1.0, 0.0, 0.0}, {0.0, 2.0, 0.5}, {1.0, 0.0, 0.0}};
  SolverConfig cfg{.gas = GasLaw(2.0),
                   .damping = DampingLaw(0.5),
                   .grid = Grid::symmetric(2.0, 8),
                   .t_end = 1.0,
                   .initial = InitialData{.kind = InitialKind::kTable,
                                          .table = tent}};
  EulerSolver solver(cfg);
  const auto& s = solver.state();
  // Centers at -1.75, -1.25 lie outside the table: vacuum.
  CHECK(s.rho[0] == 0.0);
  CHECK(s.rho[1] == 0.0);
  CHECK(s.rho[2] == doctest::Approx(0.5).epsilon(1e-14));   // x = -0.75
  CHECK(s.mom[2] == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(s.rho[3] == doctest::Approx(1.5).epsilon(1e-14));   // x = -0.25
  CHECK(s.mom[3] == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(s.rho[4] == doctest::Approx(1.5).epsilon(1e-14));   // x = +0.25
  CHECK(s.rho[7] == 0.0);

  auto bad = cfg;
  bad.initial.table = {{0.0, 1.0, 0.0}, {0.0, 2.0, 0.0}};
  CHECK_THROWS_AS(EulerSolver{bad}, std::invalid_argument);
}

TEST_CASE("constructor rejects malformed configurations") {
  const Grid grid = Grid::symmetric(1.0, 16);
  const InitialData riemann{.kind = InitialKind::kRiemann};
  SolverConfig good{.gas = GasLaw(2.0),
                    .damping = DampingLaw(0.5),
                    .grid = grid,
                    .t_end = 1.0,
                    .initial = riemann};
  CHECK_NOTHROW(EulerSolver{good});

  auto bad = good;
  bad.cfl = 1.0;
  CHECK_THROWS_AS(EulerSolver{bad}, std::invalid_argument);
  bad = good;
  bad.t_end = -1.0;
  CHECK_THROWS_AS(EulerSolver{bad}, std::invalid_argument);
  bad = good;
  bad.grid.n_cells = 1;
  CHECK_THROWS_AS(EulerSolver{bad}, std::invalid_argument);
  bad = good;
  bad.initial.kind = InitialKind::kBarenblatt;  // mass still 0
  CHECK_THROWS_AS(EulerSolver{bad}, std::invalid_argument);
  bad = good;
  bad.mass = 1.0;
  bad.initial.kind = InitialKind::kPerturbedBarenblatt;
  bad.initial.amplitude = 1.5;
  bad.initial.wavelength = 1.0;
  CHECK_THROWS_AS(EulerSolver{bad}, std::invalid_argument);
  bad = good;
  bad.initial.kind = InitialKind::kTwoBumps;
  bad.initial.centers = {0.0};
  bad.initial.widths = {1.0, 1.0};
  bad.initial.heights = {1.0};
  CHECK_THROWS_AS(EulerSolver{bad}, std::invalid_argument);
}

TEST_CASE("perturbed profile run: conservation, invariant region, budgets") {
  const GasLaw gas(2.0);
  const DampingLaw damping(0.5);
  const auto profile = BarenblattProfile::from_mass(gas, damping, 1.0);
  const double t_end = 2.0;
  SolverConfig cfg{
      .gas = gas,
      .damping = damping,
      .grid = Grid::symmetric(1.5 * profile.support_radius(t_end), 300),
      .t_end = t_end,
      .output_times = {0.0, 0.5, 1.0, 2.0},
      .mass = 1.0,
      .initial = InitialData{.kind = InitialKind::kPerturbedBarenblatt,
                             .amplitude = 0.3,
                             .wavelength = profile.support_radius(0.0),
                             .phase = 0.3}};
  const RunResult res = run(cfg);

  CHECK(res.n_steps > 100);
  CHECK(res.t_final == doctest::Approx(t_end).epsilon(1e-12));
  CHECK(res.max_mass_drift <= 1e-11);
  CHECK(res.max_w_excess <= 1e-6);
  CHECK(res.max_z_excess <= 1e-6);
  CHECK(res.worst_energy_budget_slack <= 1e-3);
  CHECK(res.worst_tilde_budget_slack <= 1e-3);
  CHECK(res.boundary_rho_max <= cfg.dry_threshold);
  CHECK(res.has_reference);
  // The reference profile carries the realized discrete mass, which the
  // perturbation shifts away from the configured value.
  CHECK(res.reference_mass == doctest::Approx(res.mass_initial).epsilon(1e-12));
  CHECK(res.mass_initial == doctest::Approx(1.0).epsilon(0.05));

  REQUIRE(res.diagnostics.size() == cfg.output_times.size());
  REQUIRE(res.snapshots.size() == cfg.output_times.size());
  for (std::size_t k = 0; k < cfg.output_times.size(); ++k) {
    CHECK(res.snapshots[k].t == doctest::Approx(cfg.output_times[k]).epsilon(1e-12));
    CHECK(res.diagnostics[k].t == doctest::Approx(cfg.output_times[k]).epsilon(1e-12));
    CHECK(res.diagnostics[k].min_rho >= 0.0);
    CHECK(res.diagnostics[k].mass == doctest::Approx(res.mass_initial).epsilon(1e-11));
  }
  // The perturbation decays: the profile gap shrinks from start to finish.
  CHECK(res.diagnostics.back().lgp1_gap < res.diagnostics.front().lgp1_gap);
  CHECK(res.diagnostics.back().y_linf < res.diagnostics.front().y_linf);
}

TEST_CASE("equilibrium profile data stays near the profile") {
  const GasLaw gas(2.0);
  const DampingLaw damping(0.5);
  const auto profile = BarenblattProfile::from_mass(gas, damping, 1.0);
  SolverConfig cfg{.gas = gas,
                   .damping = damping,
                   .grid = Grid::symmetric(1.5 * profile.support_radius(1.0), 400),
                   .t_end = 1.0,
                   .output_times = {1.0},
                   .mass = 1.0,
                   .initial = InitialData{.kind = InitialKind::kBarenblatt}};
  const RunResult res = run(cfg);
  CHECK(res.max_mass_drift <= 1e-11);
  CHECK(res.max_w_excess <= 1e-6);
  CHECK(res.max_z_excess <= 1e-6);
  // The profile is the large-time attractor, not an exact solution of the
  // full system, so the state drifts through an early transient; the gap must
  // stay a small fraction of the mass.
  CHECK(res.diagnostics.back().l1_gap < 0.1);
}

TEST_CASE("dam break matches a self-converged fine-grid reference") {
  const auto solve = [](std::size_t cells) {
    SolverConfig cfg{.gas = GasLaw(2.0),
                     .damping = DampingLaw(0.5),
                     .grid = Grid::symmetric(1.0, cells),
                     .t_end = 0.5,
                     .output_times = {0.5},
                     .initial = InitialData{.kind = InitialKind::kRiemann,
                                            .rho_left = 1.0,
                                            .u_left = 0.0,
                                            .rho_right = 0.125,
                                            .u_right = 0.0}};
    return run(cfg);
  };
  const RunResult coarse = solve(300);
  const RunResult fine = solve(2400);
  const Grid cg = Grid::symmetric(1.0, 300);
  const Grid fg = Grid::symmetric(1.0, 2400);

  CHECK(coarse.max_mass_drift <= 1e-11);
  CHECK(coarse.max_w_excess <= 1e-6);
  CHECK(coarse.max_z_excess <= 1e-6);

  // Mid-level positions of the rarefaction (upper level) and the shock front
  // (lower level) agree within 2% of the half-width.
  for (double level : {0.85, 0.3}) {
    const double xc = crossing(coarse.snapshots[0].rho, cg, level, level < 0.5);
    const double xf = crossing(fine.snapshots[0].rho, fg, level, level < 0.5);
    REQUIRE(std::isfinite(xc));
    REQUIRE(std::isfinite(xf));
    CHECK(std::abs(xc - xf) <= 0.02);
  }
}

TEST_SUITE_END();

}  // namespace
}  // namespace be
