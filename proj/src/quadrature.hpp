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
#include <vector>

namespace be {

/// One abscissa/weight pair of a quadrature rule.
struct QuadNode {
  double x;
  double w;
};

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
/// 2n-1.  Nodes ascend.
std::vector<QuadNode> gauss_legendre(int n);

/// n-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on
/// [-1, 1], alpha, beta > -1.  The weights absorb the Jacobi factor, so
/// sum w_i f(x_i) approximates the weighted integral of f alone.
std::vector<QuadNode> gauss_jacobi(int n, double alpha, double beta);

/// ln Beta(p, q) and Beta(p, q) for p, q > 0.
double log_beta(double p, double q);
double beta_function(double p, double q);

/// Integrand for tanh-sinh integration.  Receives the abscissa together with
/// its exactly computed distances to both interval endpoints, so integrands
/// with endpoint singularities (algebraic factors like (b-x)^s) can be
/// evaluated without cancellation.
using SingularIntegrand =
    std::function<double(double x, double dist_left, double dist_right)>;

/// Tanh-sinh (double-exponential) quadrature of f over [a, b].  Converges
/// superalgebraically for integrands with algebraic endpoint singularities.
/// Levels are doubled until successive estimates agree to rel_tol.
double tanh_sinh(const SingularIntegrand& f, double a, double b,
                 double rel_tol = 1e-13, int max_level = 12);

/// Convenience overload for integrands that do not need endpoint distances.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13, int max_level = 12);

/// Tanh-sinh applied piecewise over consecutive breakpoints (ascending).
/// Used to isolate interior kinks so each piece is smooth inside.
double tanh_sinh_piecewise(const SingularIntegrand& f,
                           const std::vector<double>& breakpoints,
                           double rel_tol = 1e-13);

}  // namespace be
