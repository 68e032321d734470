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

#include "gas.hpp"

#include <cmath>
#include <stdexcept>

namespace be {

GasLaw::GasLaw(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0) || !(gamma < 3.0))
    throw std::domain_error("GasLaw: gamma must lie in (1, 3)");
  kappa_ = (gamma - 1.0) * (gamma - 1.0) / (4.0 * gamma);
  theta_ = 0.5 * (gamma - 1.0);
  l_ = (3.0 - gamma) / (2.0 * (gamma - 1.0));
}

DampingLaw::DampingLaw(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0) || !(lambda < 1.0))
    throw std::domain_error("DampingLaw: lambda must lie in [0, 1)");
}

double DampingLaw::coefficient(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("DampingLaw: t must be >= 0");
  return std::pow(1.0 + t, -lambda_);
}

Grid Grid::symmetric(double half_width, std::size_t n_cells) {
  if (!(half_width > 0.0) || n_cells == 0)
    throw std::invalid_argument("Grid: half_width > 0 and n_cells > 0 required");
  return Grid{-half_width, 2.0 * half_width / static_cast<double>(n_cells),
              n_cells};
}

double pressure(const GasLaw& gas, double rho) {
  if (!(rho >= 0.0)) throw std::domain_error("pressure: rho must be >= 0");
  return gas.kappa() * std::pow(rho, gas.gamma());
}

double sound_speed(const GasLaw& gas, double rho) {
  if (!(rho >= 0.0)) throw std::domain_error("sound_speed: rho must be >= 0");
  return 0.5 * (gas.gamma() - 1.0) * std::pow(rho, gas.theta());
}

double velocity(double rho, double mom, double dry_threshold) {
  if (rho < dry_threshold) return 0.0;
  return mom / rho;
}

RiemannInvariants riemann_invariants(const GasLaw& gas, double rho, double u) {
  if (!(rho >= 0.0))
    throw std::domain_error("riemann_invariants: rho must be >= 0");
  const double offset = std::pow(rho, gas.theta());
  return {u + offset, u - offset};
}

PressureGapReport check_pressure_gap(const GasLaw& gas, double rho,
                                     double rho_bar, double bound) {
  if (!(rho >= 0.0) || !(rho_bar >= 0.0) || rho > bound || rho_bar > bound)
    throw std::domain_error("check_pressure_gap: inputs must lie in [0, bound]");
  const double g = gas.gamma();
  const double diff = rho - rho_bar;
  const double gap_product =
      (std::pow(rho, g) - std::pow(rho_bar, g)) * diff;
  const double abs_diff_power = std::pow(std::abs(diff), g + 1.0);
  const double weighted_square =
      (std::pow(rho, g - 1.0) + std::pow(rho_bar, g - 1.0)) * diff * diff;
  return {gap_product, abs_diff_power, weighted_square,
          gap_product >= abs_diff_power};
}

}  // namespace be
