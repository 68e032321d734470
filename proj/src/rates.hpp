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
#include <stdexcept>
#include <utility>
#include <vector>

#include "gas.hpp"

namespace be {

// Predicted supremal decay exponents (the eps -> 0 limits):
//   mu_tilde : the (gamma+1)-norm gap power, ||rho - rho_bar||^{gamma+1}_{gamma+1}
//              <= C (1+t)^{-mu_tilde + eps};
//   alpha_tilde : the L^1 gap power.
// Two regimes meet at lambda = gamma/(gamma+2):
//   lambda <= gamma/(gamma+2):  mu = 1 + lambda - (lambda+1)/(2(gamma+1)),
//                               alpha = (lambda+1)/(4(gamma+1))     (branch 1)
//   lambda >= gamma/(gamma+2):  mu = 3/2 + lambda/2 - (lambda+1)/(gamma+1),
//                               alpha = (1-lambda)/4                (branch 2)
struct RateResult {
  double mu_tilde;
  double alpha_tilde;
  int branch;  // 1 or 2
  // (mu_k, theta_k) per bootstrap sweep; both components nondecreasing.
  std::vector<std::pair<double, double>> trace;
};

class RateIterationError : public std::runtime_error {
 public:
  RateIterationError(const std::string& what,
                     std::vector<std::pair<double, double>> trace)
      : std::runtime_error(what), trace(std::move(trace)) {}
  std::vector<std::pair<double, double>> trace;
};

RateResult closed_form_rates(double gamma, double lambda);

// Bootstrap iteration
//   theta_0 = 0,
//   mu_{k+1}   = min{ 1 + theta_k,
//                     1 + lambda/2 - (lambda+1)/(2(gamma+1)) + theta_k/2 },
//   theta_{k+1} = min{ mu_{k+1} - lambda, lambda, (gamma-lambda)/(gamma+1) },
// run until successive mu agree to tol.  The limit matches the closed form.
RateResult iterate_rates(double gamma, double lambda, double tol = 1e-12,
                         int max_iter = 200);

// Antiderivative of the density gap:
//   y_i = -dx * sum_{j<=i} (rho_j - rho_bar_j).
// When the discrete masses agree the last entry telescopes to zero.
std::vector<double> y_potential(const std::vector<double>& rho,
                                const std::vector<double>& rho_bar, double dx);

// Density-gap norms against a reference:
//   lp_pow[k] = sum |rho - rho_bar|^{p_k} dx   (the p-th power, not the norm),
//   l1, linf, and the reference-weighted square
//   weighted = sum rho_bar^{gamma-1} (rho - rho_bar)^2 dx.
struct GapNorms {
  std::vector<double> lp_pow;
  double l1;
  double linf;
  double weighted;
};
GapNorms gap_norms(const std::vector<double>& rho,
                   const std::vector<double>& rho_bar, double dx, double gamma,
                   const std::vector<double>& p_list);

// Least-squares fit of log(value) against log(1+t) over t in [t_start, t_end].
// r_squared is 1 - SS_res/SS_tot, defined as 1 for zero-variance data.
struct DecayFit {
  double slope;
  double intercept;
  double r_squared;
  double t_start;
  double t_end;
  std::size_t n_points;
};
DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& value,
                   double t_start, double t_end);

}  // namespace be
