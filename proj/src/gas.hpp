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

#include <cstddef>
#include <vector>

namespace be {

// Polytropic gas with the normalized stiffness kappa = (gamma-1)^2/(4 gamma).
// That choice makes the sound speed exactly ((gamma-1)/2) rho^theta, so both
// Riemann invariants carry coefficient one.
class GasLaw {
 public:
  explicit GasLaw(double gamma);

  double gamma() const { return gamma_; }
  double kappa() const { return kappa_; }
  // theta = (gamma-1)/2: exponent turning density into the invariant offset.
  double theta() const { return theta_; }
  // Kernel exponent l = (3-gamma)/(2(gamma-1)) of the entropy weight
  // (1-z^2)^l; positive for gamma in (1,3).
  double kernel_exponent() const { return l_; }

 private:
  double gamma_;
  double kappa_;
  double theta_;
  double l_;
};

// Friction coefficient 1/(1+t)^lambda.  lambda = 0 (constant damping) is
// admitted as the classical limit; the sublinear regime is lambda in (0,1).
class DampingLaw {
 public:
  explicit DampingLaw(double lambda);
  double lambda() const { return lambda_; }
  // 1/(1+t)^lambda for t >= 0.
  double coefficient(double t) const;

 private:
  double lambda_;
};

// Uniform cell-centered grid: center(i) = x_left + (i + 1/2) dx.
struct Grid {
  double x_left = 0.0;
  double dx = 0.0;
  std::size_t n_cells = 0;

  double center(std::size_t i) const { return x_left + (i + 0.5) * dx; }
  double x_right() const { return x_left + dx * static_cast<double>(n_cells); }
  // Symmetric grid on [-half_width, half_width].
  static Grid symmetric(double half_width, std::size_t n_cells);
};

// Conserved fields at one instant.  Vacuum cells (rho below the caller's dry
// threshold) carry zero momentum by convention.
struct FieldState {
  double t = 0.0;
  std::vector<double> rho;
  std::vector<double> mom;
};

double pressure(const GasLaw& gas, double rho);
double sound_speed(const GasLaw& gas, double rho);

// Velocity under the vacuum convention: zero where rho < dry_threshold.
double velocity(double rho, double mom, double dry_threshold);

struct RiemannInvariants {
  double w;  // u + rho^theta
  double z;  // u - rho^theta
};
RiemannInvariants riemann_invariants(const GasLaw& gas, double rho, double u);

// Pointwise pressure-gap comparison between a state rho and a reference
// rho_bar, both in [0, bound]:
//   gap_product    = (rho^gamma - rho_bar^gamma)(rho - rho_bar)
//   abs_diff_power = |rho - rho_bar|^{gamma+1}
//   weighted_square= (rho^{gamma-1} + rho_bar^{gamma-1})(rho - rho_bar)^2
// first_inequality reports gap_product >= abs_diff_power, which holds for all
// admissible pairs with no constant.
struct PressureGapReport {
  double gap_product;
  double abs_diff_power;
  double weighted_square;
  bool first_inequality;
};
PressureGapReport check_pressure_gap(const GasLaw& gas, double rho,
                                     double rho_bar, double bound = 2.0);

}  // namespace be
