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

#include "pme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace be {

double rescale_time(const DampingLaw& damping, double t) {
  if (!(t >= 0.0)) throw std::domain_error("rescale_time: t must be >= 0");
  const double a = 1.0 + damping.lambda();
  return (std::pow(1.0 + t, a) - 1.0) / a;
}

double physical_time(const DampingLaw& damping, double tau) {
  if (!(tau >= 0.0)) throw std::domain_error("physical_time: tau must be >= 0");
  const double a = 1.0 + damping.lambda();
  return std::pow(1.0 + a * tau, 1.0 / a) - 1.0;
}

double pme_stable_dtau(const PmeRun& run) {
  const double rho_max = *std::max_element(run.rho.begin(), run.rho.end());
  if (rho_max <= 0.0) return INFINITY;
  const double g = run.gas.gamma();
  return run.grid.dx * run.grid.dx /
         (2.0 * run.gas.kappa() * g * std::pow(rho_max, g - 1.0));
}

void pme_step(PmeRun& run, double dtau) {
  if (!(dtau > 0.0)) throw std::domain_error("pme_step: dtau must be > 0");
  const std::size_t n = run.rho.size();
  if (n != run.grid.n_cells || n < 2)
    throw std::invalid_argument("pme_step: state does not match grid");
  const double bound = pme_stable_dtau(run);
  if (dtau > bound)
    throw std::runtime_error("pme_step: dtau exceeds the stability bound");
  const double g = run.gas.gamma();
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (run.rho[i] < 0.0) throw std::runtime_error("pme_step: negative density");
    p[i] = std::pow(run.rho[i], g);
  }
  // Interface fluxes -kappa (p_{i+1} - p_i)/dx; zero at the walls.
  const double nu = run.gas.kappa() * dtau / (run.grid.dx * run.grid.dx);
  double left_flux_term = 0.0;  // nu * (p_i - p_{i-1}) at the current face
  for (std::size_t i = 0; i < n; ++i) {
    const double right_flux_term = (i + 1 < n) ? nu * (p[i + 1] - p[i]) : 0.0;
    run.rho[i] += right_flux_term - left_flux_term;
    left_flux_term = right_flux_term;
  }
  run.tau += dtau;
}

void pme_advance_to(PmeRun& run, double tau_target, double safety) {
  if (!(tau_target >= run.tau))
    throw std::domain_error("pme_advance_to: target precedes current time");
  if (!(safety > 0.0) || !(safety < 1.0))
    throw std::domain_error("pme_advance_to: safety must lie in (0, 1)");
  while (run.tau < tau_target) {
    const double bound = pme_stable_dtau(run);
    double dtau = safety * bound;
    if (!(dtau > 0.0) || !std::isfinite(dtau)) {
      run.tau = tau_target;  // all-vacuum state does not evolve
      return;
    }
    dtau = std::min(dtau, tau_target - run.tau);
    if (dtau <= 0.0) break;
    pme_step(run, dtau);
  }
  run.tau = tau_target;
}

}  // namespace be
