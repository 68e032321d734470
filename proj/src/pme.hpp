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

// Rescaled clock tau(t) = ((1+t)^{1+lambda} - 1)/(1+lambda).  In tau the
// friction-dominated limit becomes the autonomous porous-medium equation
// rho_tau = kappa (rho^gamma)_xx.
double rescale_time(const DampingLaw& damping, double t);
// Inverse map: t(tau).
double physical_time(const DampingLaw& damping, double tau);

// Explicit conservative porous-medium march on a uniform grid with zero-flux
// boundaries.  rho holds cell averages; tau is the rescaled clock.
struct PmeRun {
  GasLaw gas;
  DampingLaw damping;
  Grid grid;
  std::vector<double> rho;
  double tau = 0.0;
};

// Largest stable step dx^2 / (2 kappa gamma max(rho)^{gamma-1}).
double pme_stable_dtau(const PmeRun& run);

// One explicit step of size dtau.  Conservative flux differencing keeps the
// discrete mass constant to round-off; positivity holds whenever dtau is
// within the stability bound, and oversized steps are rejected.
void pme_step(PmeRun& run, double dtau);

// March to the given rescaled time with steps at safety * stability bound.
void pme_advance_to(PmeRun& run, double tau_target, double safety = 0.9);

}  // namespace be
