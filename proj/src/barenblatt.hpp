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

#include "gas.hpp"

namespace be {

// Self-similar source-type solution of the porous-medium limit with
// time-dependent friction:
//
//   rho(x, t) = (1+t)^{-s} (A - B xi^2)_+^{1/(gamma-1)},  xi = x (1+t)^{-s},
//   m(x, t)   = s x rho(x, t) / (1+t),
//
// with s = (lambda+1)/(gamma+1) and B = (lambda+1)(gamma-1) /
// (2 kappa gamma (gamma+1)).  The amplitude A is fixed by the total mass:
// M = 2 sqrt(A/B) A^{1/(gamma-1)} I where I = integral_0^1 (1-y^2)^{1/(gamma-1)} dy.
// The momentum closed form equals -kappa (1+t)^lambda d/dx rho^gamma wherever
// the profile is positive; the closed form stays finite at the support edge
// for every admissible gamma, so it is the one evaluated.
class BarenblattProfile {
 public:
  // Builds the profile whose mass equals M > 0.
  static BarenblattProfile from_mass(const GasLaw& gas,
                                     const DampingLaw& damping, double mass);

  const GasLaw& gas() const { return gas_; }
  const DampingLaw& damping() const { return damping_; }
  double mass() const { return mass_; }
  double amplitude() const { return A_; }       // A
  double shape() const { return B_; }           // B
  double similarity_exponent() const { return s_; }

  double density(double x, double t) const;
  double momentum(double x, double t) const;
  // sqrt(A/B) (1+t)^s: the density vanishes for |x| beyond this.
  double support_radius(double t) const;

  // ||rho(., t)||_{L^p} for p in [1, inf]; pass p = INFINITY for the sup norm.
  // Closed form: [2 sqrt(A/B) A^{p/(gamma-1)} I_p]^{1/p} (1+t)^{-s(p-1)/p}
  // with I_p = (1/2) Beta(1/2, p/(gamma-1) + 1).
  double lp_norm(double p, double t) const;

  // Exact integral of the density over [xl, xr] at time t (tanh-sinh on
  // the pieces inside the support, split at the edges).
  double integral(double xl, double xr, double t) const;
  // Cell averages of the density over a grid; edge cells are split at the
  // support boundary so the discrete mass matches the continuous one.
  std::vector<double> cell_averages(const Grid& grid, double t) const;
  // Cell averages of the momentum.
  std::vector<double> momentum_cell_averages(const Grid& grid, double t) const;

 private:
  BarenblattProfile(const GasLaw& gas, const DampingLaw& damping, double mass,
                    double A, double B, double s);

  GasLaw gas_;
  DampingLaw damping_;
  double mass_;
  double A_;
  double B_;
  double s_;
};

}  // namespace be
