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

#include <functional>

#include "gas.hpp"
#include "quadrature.hpp"

namespace be {

// Moments of the entropy kernel for the high-moment generator
// g(xi) = |xi|^{2 gamma/(gamma-1)}:
//
//   C1 = integral_{-1}^{1} |z|^{2 gamma/(gamma-1)} (1-z^2)^l dz
//      = Beta(p+1, p) = (1/2) Beta(p, p),  p = (gamma+1)/(2(gamma-1)),
//   C2 = 2 gamma (gamma+1) / (gamma-1)^2 * C1.
//
// With these, eta(rho, m) = C1 rho^{gamma+1} + C2 m^2 + A(rho, m) where the
// remainder A is nonnegative and quartic near m = 0.
struct EntropyConstants {
  double c1;
  double c2;
  static EntropyConstants for_gas(const GasLaw& gas);
};

// m^2/(2 rho) + kappa rho^gamma/(gamma-1); zero at vacuum, domain error if
// momentum persists there.
double mechanical_energy(const GasLaw& gas, double rho, double m);

// Kernel chi(xi; rho, u) = (rho^{gamma-1} - (xi-u)^2)_+^l.
double chi(const GasLaw& gas, double xi, double rho, double u);

// Weak entropy pair generated by g:
//   eta = rho integral g(u + z rho^theta) (1-z^2)^l dz,
//   q   = rho integral g(u + z rho^theta)(u + theta z rho^theta) (1-z^2)^l dz,
// evaluated with an n-point Gauss-Jacobi rule (exact when g is a polynomial
// of degree <= 2n-1).
struct EntropyPair {
  double eta;
  double q;
};
EntropyPair weak_entropy(const GasLaw& gas,
                         const std::function<double(double)>& g, double rho,
                         double u, int n = 64);

// High-moment entropy eta(rho, m) and its remainder
// A = eta - C1 rho^{gamma+1} - C2 m^2.  The kernel integrand has a kink where
// u + z rho^theta changes sign, so the integral is split there and each piece
// integrated by tanh-sinh; the remainder then satisfies A >= -1e-10 on
// moderate states for every admissible gamma.
struct TildeEta {
  double value;
  double remainder;
};
TildeEta tilde_eta(const GasLaw& gas, const EntropyConstants& consts,
                   double rho, double m);

// Same entropy through the fixed Gauss-Jacobi rule (nodes from
// gauss_jacobi(n, l, l)).  Exact when 2 gamma/(gamma-1) is an even integer;
// used in per-step budget accumulation.
double tilde_eta_rule(const GasLaw& gas, const std::vector<QuadNode>& rule,
                      double rho, double m);

// Remainder by its own integral representation,
//   A = rho integral [g(u+z rho^theta) - g(z rho^theta) - g'(z rho^theta) u
//                     - (1/2) g''(z rho^theta) u^2] (1-z^2)^l dz,
// an independent route used to cross-check the decomposition.
double remainder_integral(const GasLaw& gas, double rho, double m);

// Checks A >= 0 and m dA/dm >= 3A at one state; dA/dm by central difference
// with step h.  tol = max(1e-8, 10 h^2 scale) absorbs the difference error.
struct RemainderCheck {
  double a;       // A(rho, m)
  double am_m;    // m * dA/dm
  double tol;
  bool a_nonneg;      // a >= -tol
  bool dominates;     // am_m >= 3 a - tol
};
RemainderCheck check_remainder_inequalities(const GasLaw& gas,
                                            const EntropyConstants& consts,
                                            double rho, double u, double h);

// Entropy relative to a reference density:
//   eta*(rho, m | rho_bar) = eta - C1 rho_bar^{gamma+1}
//                          - C1 (gamma+1) rho_bar^gamma (rho - rho_bar),
// nonnegative by convexity; equals C1 gamma rho_bar^{gamma+1} when the state
// is vacuum.
double relative_entropy(const GasLaw& gas, const EntropyConstants& consts,
                        double rho, double m, double rho_bar);

}  // namespace be
