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

#include "euler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rates.hpp"

namespace be {

namespace {

double powi(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

inline Flux2 llf_flux(double rho_l, double m_l, double u_l, double c_l,
                      double p_l, double rho_r, double m_r, double u_r,
                      double c_r, double p_r) {
  const double a = std::max(std::abs(u_l) + c_l, std::abs(u_r) + c_r);
  return {0.5 * (rho_l * u_l + rho_r * u_r) - 0.5 * a * (rho_r - rho_l),
          0.5 * (rho_l * u_l * u_l + p_l + rho_r * u_r * u_r + p_r) -
              0.5 * a * (m_r - m_l)};
}

}  // namespace

Flux2 physical_flux(const GasLaw& gas, double rho, double m,
                    double dry_threshold) {
  if (!(rho >= 0.0)) throw std::domain_error("physical_flux: rho must be >= 0");
  const double u = velocity(rho, m, dry_threshold);
  return {rho * u, rho * u * u + pressure(gas, rho)};
}

Flux2 numerical_flux(const GasLaw& gas, double rho_l, double m_l, double rho_r,
                     double m_r, double dry_threshold) {
  if (!(rho_l >= 0.0) || !(rho_r >= 0.0))
    throw std::domain_error("numerical_flux: densities must be >= 0");
  const double u_l = velocity(rho_l, m_l, dry_threshold);
  const double u_r = velocity(rho_r, m_r, dry_threshold);
  const double c_l = rho_l < dry_threshold ? 0.0 : sound_speed(gas, rho_l);
  const double c_r = rho_r < dry_threshold ? 0.0 : sound_speed(gas, rho_r);
  return llf_flux(rho_l, m_l, u_l, c_l, pressure(gas, rho_l), rho_r, m_r, u_r,
                  c_r, pressure(gas, rho_r));
}

double damping_factor(const DampingLaw& damping, double t0, double dt) {
  if (!(t0 >= 0.0) || !(dt >= 0.0))
    throw std::domain_error("damping_factor: t0, dt must be >= 0");
  const double a = 1.0 - damping.lambda();
  const double drop = (std::pow(1.0 + t0 + dt, a) - std::pow(1.0 + t0, a)) / a;
  return std::exp(-drop);
}

EulerSolver::EulerSolver(const SolverConfig& config) : config_(config) {
  const Grid& g = config_.grid;
  if (g.n_cells < 2 || !(g.dx > 0.0))
    throw std::invalid_argument("EulerSolver: grid must have >= 2 cells");
  if (!(config_.cfl > 0.0) || !(config_.cfl < 1.0))
    throw std::invalid_argument("EulerSolver: cfl must lie in (0, 1)");
  if (!(config_.dry_threshold >= 0.0))
    throw std::invalid_argument("EulerSolver: dry_threshold must be >= 0");
  if (!(config_.max_dt >= 0.0))
    throw std::invalid_argument("EulerSolver: max_dt must be >= 0");
  if (!(config_.t_end >= config_.initial.t0))
    throw std::invalid_argument("EulerSolver: t_end precedes the initial time");

  consts_ = EntropyConstants::for_gas(config_.gas);
  kernel_rule_ = gauss_jacobi(64, config_.gas.kernel_exponent(),
                              config_.gas.kernel_exponent());
  // When 2 gamma/(gamma-1) is an even integer the kernel generator is a true
  // polynomial and the entropy reduces to a finite moment sum.
  const double e = 2.0 * config_.gas.gamma() / (config_.gas.gamma() - 1.0);
  const int ie = static_cast<int>(std::lround(e));
  if (std::abs(e - ie) < 1e-12 && ie % 2 == 0) {
    generator_exponent_ = ie;
    std::vector<double> moments(ie + 1, 0.0);
    for (int j = 0; j <= ie; j += 2)
      for (const QuadNode& n : kernel_rule_) moments[j] += n.w * powi(n.x, j);
    moment_coef_.assign(ie / 2 + 1, 0.0);
    for (int k = 0; k <= ie / 2; ++k) {
      // binomial(ie, 2k)
      double binom = 1.0;
      for (int j = 0; j < 2 * k; ++j)
        binom = binom * static_cast<double>(ie - j) / static_cast<double>(j + 1);
      moment_coef_[k] = binom * moments[2 * k];
    }
  }

  realize_initial_data();
  init_monitors();
}

double EulerSolver::tilde_eta_cell(double rho, double mom) const {
  if (rho <= 0.0) return 0.0;
  const double g = config_.gas.gamma();
  if (mom == 0.0) return consts_.c1 * std::pow(rho, g + 1.0);
  if (!moment_coef_.empty()) {
    const double off2 = std::pow(rho, g - 1.0);
    const double u = mom / rho;
    double sum = 0.0;
    for (int k = 0; k < static_cast<int>(moment_coef_.size()); ++k)
      sum += moment_coef_[k] * powi(u, generator_exponent_ - 2 * k) *
             powi(off2, k);
    return rho * sum;
  }
  return tilde_eta_rule(config_.gas, kernel_rule_, rho, mom);
}

void EulerSolver::realize_initial_data() {
  const Grid& g = config_.grid;
  const InitialData& init = config_.initial;
  if (!(init.t0 >= 0.0))
    throw std::invalid_argument("EulerSolver: initial time must be >= 0");
  state_.t = init.t0;
  state_.rho.assign(g.n_cells, 0.0);
  state_.mom.assign(g.n_cells, 0.0);

  switch (init.kind) {
    case InitialKind::kBarenblatt:
    case InitialKind::kPerturbedBarenblatt: {
      if (!(config_.mass > 0.0))
        throw std::invalid_argument(
            "EulerSolver: profile initial data requires mass > 0");
      profile_.emplace(BarenblattProfile::from_mass(config_.gas,
                                                    config_.damping,
                                                    config_.mass));
      state_.rho = profile_->cell_averages(g, init.t0);
      if (init.kind == InitialKind::kBarenblatt) {
        state_.mom = profile_->momentum_cell_averages(g, init.t0);
      } else {
        if (!(std::abs(init.amplitude) < 1.0))
          throw std::invalid_argument(
              "EulerSolver: perturbation amplitude must satisfy |a| < 1");
        if (!(init.wavelength > 0.0))
          throw std::invalid_argument(
              "EulerSolver: perturbation wavelength must be > 0");
        for (std::size_t i = 0; i < g.n_cells; ++i) {
          const double phase =
              2.0 * M_PI * g.center(i) / init.wavelength + init.phase;
          state_.rho[i] *= 1.0 + init.amplitude * std::sin(phase);
        }
      }
      break;
    }
    case InitialKind::kTwoBumps: {
      const std::size_t nb = init.centers.size();
      if (nb == 0 || init.widths.size() != nb || init.heights.size() != nb)
        throw std::invalid_argument(
            "EulerSolver: bump centers/widths/heights must have equal size");
      for (std::size_t b = 0; b < nb; ++b)
        if (!(init.widths[b] > 0.0) || !(init.heights[b] >= 0.0))
          throw std::invalid_argument(
              "EulerSolver: bump widths must be > 0 and heights >= 0");
      static const std::vector<QuadNode> rule = gauss_legendre(5);
      for (std::size_t i = 0; i < g.n_cells; ++i) {
        const double xc = g.center(i);
        double avg = 0.0;
        for (const QuadNode& n : rule) {
          const double x = xc + 0.5 * g.dx * n.x;
          double v = 0.0;
          for (std::size_t b = 0; b < nb; ++b) {
            const double xi = (x - init.centers[b]) / init.widths[b];
            if (std::abs(xi) < 1.0) {
              const double cz = std::cos(0.5 * M_PI * xi);
              v += init.heights[b] * cz * cz;
            }
          }
          avg += 0.5 * n.w * v;
        }
        state_.rho[i] = avg;
      }
      break;
    }
    case InitialKind::kRiemann: {
      if (!(init.rho_left >= 0.0) || !(init.rho_right >= 0.0))
        throw std::invalid_argument("EulerSolver: Riemann densities must be >= 0");
      for (std::size_t i = 0; i < g.n_cells; ++i) {
        const bool left = g.center(i) < 0.0;
        state_.rho[i] = left ? init.rho_left : init.rho_right;
        state_.mom[i] = state_.rho[i] * (left ? init.u_left : init.u_right);
      }
      break;
    }
    case InitialKind::kTable: {
      if (init.table.size() < 2)
        throw std::invalid_argument("EulerSolver: table needs >= 2 samples");
      for (std::size_t i = 1; i < init.table.size(); ++i)
        if (!(init.table[i][0] > init.table[i - 1][0]))
          throw std::invalid_argument("EulerSolver: table x must ascend");
      for (std::size_t i = 0; i < g.n_cells; ++i) {
        const double x = g.center(i);
        const auto& tb = init.table;
        if (x <= tb.front()[0] || x >= tb.back()[0]) continue;
        std::size_t j = 1;
        while (tb[j][0] < x) ++j;
        const double w = (x - tb[j - 1][0]) / (tb[j][0] - tb[j - 1][0]);
        state_.rho[i] = std::max(0.0, (1.0 - w) * tb[j - 1][1] + w * tb[j][1]);
        state_.mom[i] = (1.0 - w) * tb[j - 1][2] + w * tb[j][2];
      }
      break;
    }
  }

  for (std::size_t i = 0; i < g.n_cells; ++i) {
    if (!(state_.rho[i] >= 0.0) || !std::isfinite(state_.mom[i]))
      throw std::invalid_argument("EulerSolver: invalid initial data");
    if (state_.rho[i] < config_.dry_threshold) state_.mom[i] = 0.0;
  }

  double mass = 0.0;
  for (double r : state_.rho) mass += r;
  mass *= g.dx;
  mass_initial_ = mass;
  if (mass > 0.0)
    reference_.emplace(BarenblattProfile::from_mass(config_.gas,
                                                    config_.damping, mass));
}

void EulerSolver::init_monitors() {
  const Grid& g = config_.grid;
  double e = 0.0, t = 0.0;
  double wmax = -INFINITY, zmin = INFINITY;
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    const double rho = state_.rho[i], mom = state_.mom[i];
    e += mechanical_energy(config_.gas, rho, mom);
    t += tilde_eta_cell(rho, mom);
    const double u = velocity(rho, mom, config_.dry_threshold);
    const double off = std::pow(rho, config_.gas.theta());
    wmax = std::max(wmax, u + off);
    zmin = std::min(zmin, u - off);
  }
  energy_initial_ = energy_now_ = e * g.dx;
  tilde_initial_ = tilde_now_ = t * g.dx;
  w_max0_ = wmax;
  z_min0_ = zmin;
  worst_energy_slack_ = -INFINITY;
  worst_tilde_slack_ = -INFINITY;
  boundary_rho_max_ =
      std::max(state_.rho.front(), state_.rho.back());
}

double EulerSolver::suggest_dt() const {
  const double dry = config_.dry_threshold;
  double a_max = 0.0;
  for (std::size_t i = 0; i < state_.rho.size(); ++i) {
    const double rho = state_.rho[i];
    if (rho < dry) continue;
    const double u = state_.mom[i] / rho;
    a_max = std::max(a_max, std::abs(u) + sound_speed(config_.gas, rho));
  }
  if (a_max == 0.0) return INFINITY;
  return config_.cfl * config_.grid.dx / a_max;
}

double EulerSolver::step(double dt_limit) {
  if (!(dt_limit > 0.0))
    throw std::invalid_argument("EulerSolver::step: dt_limit must be > 0");
  const Grid& grid = config_.grid;
  const std::size_t n = grid.n_cells;
  const double gamma = config_.gas.gamma();
  const double kap = config_.gas.kappa();
  const double dry = config_.dry_threshold;
  auto& rho = state_.rho;
  auto& mom = state_.mom;

  // Primitives and the CFL bound in one pass.
  std::vector<double> u(n), c(n), p(n);
  double a_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = kap * std::pow(rho[i], gamma);
    if (rho[i] < dry) {
      u[i] = 0.0;
      c[i] = 0.0;
    } else {
      u[i] = mom[i] / rho[i];
      // rho^{gamma-1} recovered from the pressure to avoid a second pow.
      c[i] = 0.5 * (gamma - 1.0) * std::sqrt(p[i] / (kap * rho[i]));
    }
    a_max = std::max(a_max, std::abs(u[i]) + c[i]);
  }
  double dt = (a_max > 0.0) ? config_.cfl * grid.dx / a_max : INFINITY;
  if (config_.max_dt > 0.0) dt = std::min(dt, config_.max_dt);
  dt = std::min(dt, dt_limit);
  if (std::isinf(dt)) {
    // Static state: nothing moves and no momentum exists to damp.
    state_.t += dt_limit;
    return dt_limit;
  }

  // Hyperbolic substep.
  std::vector<Flux2> flux(n + 1);
  if (config_.boundary == Boundary::kZeroFlux) {
    // Reflecting walls: the ghost state mirrors the adjacent cell with the
    // momentum negated, so the mass flux cancels exactly (no leakage) and a
    // rest state with uniform pressure stays at rest.
    flux[0] = llf_flux(rho[0], -mom[0], -u[0], c[0], p[0], rho[0], mom[0],
                       u[0], c[0], p[0]);
    flux[n] = llf_flux(rho[n - 1], mom[n - 1], u[n - 1], c[n - 1], p[n - 1],
                       rho[n - 1], -mom[n - 1], -u[n - 1], c[n - 1], p[n - 1]);
    flux[0].mass = 0.0;
    flux[n].mass = 0.0;
  } else {
    flux[0] = flux[n] = llf_flux(rho[n - 1], mom[n - 1], u[n - 1], c[n - 1],
                                 p[n - 1], rho[0], mom[0], u[0], c[0], p[0]);
  }
  for (std::size_t i = 1; i < n; ++i)
    flux[i] = llf_flux(rho[i - 1], mom[i - 1], u[i - 1], c[i - 1], p[i - 1],
                       rho[i], mom[i], u[i], c[i], p[i]);
  const double nu = dt / grid.dx;
  double rho_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) rho_scale = std::max(rho_scale, rho[i]);
  for (std::size_t i = 0; i < n; ++i) {
    rho[i] -= nu * (flux[i + 1].mass - flux[i].mass);
    mom[i] -= nu * (flux[i + 1].momentum - flux[i].momentum);
    if (rho[i] < 0.0) {
      // The update is a convex combination in exact arithmetic; anything
      // beyond rounding dust is a genuine failure.
      if (rho[i] < -1e-13 * std::max(rho_scale, 1.0))
        throw std::runtime_error("EulerSolver: negative density at t = " +
                                 std::to_string(state_.t));
      rho[i] = 0.0;
    }
  }

  // Friction substep with its dissipation integrated exactly in time, then
  // drying, totals, and monitors in a single pass.
  const double beta = damping_factor(config_.damping, state_.t, dt);
  const double omb2 = (1.0 - beta) * (1.0 + beta);
  double de = 0.0, dm2 = 0.0, drem = 0.0;
  double mass = 0.0, e_tot = 0.0, t_tot = 0.0;
  double wmax = -INFINITY, zmin = INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = rho[i];
    const double pg = kap * std::pow(r, gamma);
    double uu = 0.0, off = 0.0;
    if (r < dry) {
      mom[i] = 0.0;
      t_tot += tilde_eta_cell(r, 0.0);
      e_tot += pg / (gamma - 1.0);
    } else {
      off = std::sqrt(pg / (kap * r));  // rho^theta
      const double m0 = mom[i];
      if (m0 != 0.0) {
        const double m2 = m0 * m0;
        de += m2 * omb2 / (2.0 * r);
        dm2 += consts_.c2 * m2 * omb2;
        const double tb = tilde_eta_cell(r, m0);
        const double ta = tilde_eta_cell(r, beta * m0);
        drem += (tb - ta) - consts_.c2 * m2 * omb2;
        mom[i] = beta * m0;
        t_tot += ta;
      } else {
        t_tot += tilde_eta_cell(r, 0.0);
      }
      uu = mom[i] / r;
      e_tot += 0.5 * mom[i] * mom[i] / r + pg / (gamma - 1.0);
    }
    mass += r;
    wmax = std::max(wmax, uu + off);
    zmin = std::min(zmin, uu - off);
  }
  mass *= grid.dx;
  e_tot *= grid.dx;
  t_tot *= grid.dx;
  d_energy_ += de * grid.dx;
  d_m2_ += dm2 * grid.dx;
  d_rem_ += drem * grid.dx;
  energy_now_ = e_tot;
  tilde_now_ = t_tot;
  state_.t += dt;

  if (!std::isfinite(mass) || !std::isfinite(e_tot) || !std::isfinite(t_tot))
    throw std::runtime_error(
        "EulerSolver: non-finite state at t = " + std::to_string(state_.t));

  if (mass_initial_ > 0.0) {
    max_mass_drift_ = std::max(max_mass_drift_,
                               std::abs(mass - mass_initial_) / mass_initial_);
    worst_energy_slack_ =
        std::max(worst_energy_slack_,
                 (e_tot + d_energy_ - energy_initial_) / energy_initial_);
    worst_tilde_slack_ =
        std::max(worst_tilde_slack_,
                 (t_tot + d_m2_ + d_rem_ - tilde_initial_) / tilde_initial_);
  }
  max_w_excess_ = std::max(max_w_excess_, wmax - w_max0_);
  max_z_excess_ = std::max(max_z_excess_, z_min0_ - zmin);
  boundary_rho_max_ =
      std::max({boundary_rho_max_, rho.front(), rho.back()});
  return dt;
}

double EulerSolver::total_mass() const {
  double mass = 0.0;
  for (double r : state_.rho) mass += r;
  return mass * config_.grid.dx;
}

double EulerSolver::tilde_eta_total_of(const FieldState& s) const {
  double t = 0.0;
  for (std::size_t i = 0; i < s.rho.size(); ++i)
    t += tilde_eta_cell(s.rho[i], s.mom[i]);
  return t * config_.grid.dx;
}

RunResult run(const SolverConfig& config) {
  EulerSolver solver(config);
  const double t0 = config.initial.t0;
  const double t_end = config.t_end;
  for (std::size_t i = 0; i < config.output_times.size(); ++i) {
    const double t = config.output_times[i];
    if (t < t0 || t > t_end + 1e-9 * std::max(1.0, std::abs(t_end)))
      throw std::invalid_argument("run: output time outside [t0, t_end]");
    if (i > 0 && !(t > config.output_times[i - 1]))
      throw std::invalid_argument("run: output times must ascend");
  }

  RunResult res;
  res.mass_initial = solver.initial_mass();
  res.has_reference = solver.reference().has_value();
  res.reference_mass = res.has_reference ? solver.reference()->mass() : 0.0;

  const Grid& grid = config.grid;
  const double gp1 = config.gas.gamma() + 1.0;

  const auto emit = [&](const FieldState& s, double dt_step) {
    DiagRow row{};
    row.t = s.t;
    row.dt = dt_step;
    double mass = 0.0, mom_total = 0.0, energy = 0.0;
    double min_rho = INFINITY, max_rho = -INFINITY, max_abs_u = 0.0;
    for (std::size_t i = 0; i < grid.n_cells; ++i) {
      const double r = s.rho[i], m = s.mom[i];
      mass += r;
      mom_total += m;
      energy += mechanical_energy(config.gas, r, m);
      min_rho = std::min(min_rho, r);
      max_rho = std::max(max_rho, r);
      max_abs_u = std::max(max_abs_u,
                           std::abs(velocity(r, m, config.dry_threshold)));
    }
    row.mass = mass * grid.dx;
    row.mom_total = mom_total * grid.dx;
    row.energy = energy * grid.dx;
    row.tilde_eta_total = solver.tilde_eta_total_of(s);
    row.min_rho = min_rho;
    row.max_rho = max_rho;
    row.max_abs_u = max_abs_u;
    if (res.has_reference) {
      const std::vector<double> ref =
          solver.reference()->cell_averages(grid, s.t);
      const GapNorms gn =
          gap_norms(s.rho, ref, grid.dx, config.gas.gamma(), {gp1});
      row.l1_gap = gn.l1;
      row.lgp1_gap = gn.lp_pow[0];
      const std::vector<double> y = y_potential(s.rho, ref, grid.dx);
      double y2 = 0.0, yinf = 0.0;
      for (double v : y) {
        y2 += v * v;
        yinf = std::max(yinf, std::abs(v));
      }
      row.y_l2 = std::sqrt(y2 * grid.dx);
      row.y_linf = yinf;
    }
    res.diagnostics.push_back(row);
    res.snapshots.push_back(s);
    res.snapshots.back().t = s.t;
  };

  std::size_t next_out = 0;
  const auto time_tol = [&](double t) {
    return 1e-12 * std::max(1.0, std::abs(t));
  };
  while (next_out < config.output_times.size() &&
         config.output_times[next_out] <= t0 + time_tol(t0)) {
    FieldState s = solver.state();
    s.t = config.output_times[next_out];
    emit(s, 0.0);
    ++next_out;
  }

  FieldState prev = solver.state();
  while (t_end - solver.state().t > time_tol(t_end)) {
    const double dt = solver.step(t_end - solver.state().t);
    ++res.n_steps;
    const FieldState& now = solver.state();
    while (next_out < config.output_times.size() &&
           config.output_times[next_out] <= now.t + time_tol(now.t)) {
      const double t_out = config.output_times[next_out];
      const double w = std::clamp((t_out - prev.t) / (now.t - prev.t), 0.0, 1.0);
      FieldState s;
      s.t = t_out;
      s.rho.resize(grid.n_cells);
      s.mom.resize(grid.n_cells);
      for (std::size_t i = 0; i < grid.n_cells; ++i) {
        s.rho[i] = (1.0 - w) * prev.rho[i] + w * now.rho[i];
        s.mom[i] = (1.0 - w) * prev.mom[i] + w * now.mom[i];
      }
      emit(s, dt);
      ++next_out;
    }
    prev = now;
  }
  // A requested time equal to t_end may remain when the march landed exactly.
  while (next_out < config.output_times.size()) {
    FieldState s = solver.state();
    s.t = config.output_times[next_out];
    emit(s, 0.0);
    ++next_out;
  }

  res.t_final = solver.state().t;
  res.max_mass_drift = solver.max_mass_drift();
  res.w_max0 = solver.w_max0();
  res.z_min0 = solver.z_min0();
  res.max_w_excess = solver.max_w_excess();
  res.max_z_excess = solver.max_z_excess();
  res.worst_energy_budget_slack = std::isfinite(solver.worst_energy_budget_slack())
                                      ? solver.worst_energy_budget_slack()
                                      : 0.0;
  res.worst_tilde_budget_slack = std::isfinite(solver.worst_tilde_budget_slack())
                                     ? solver.worst_tilde_budget_slack()
                                     : 0.0;
  res.boundary_rho_max = solver.boundary_rho_max();
  return res;
}

}  // namespace be
