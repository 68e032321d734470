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

#include "barenblatt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace be {

namespace {

// I_p = integral_0^1 (1 - y^2)^{p/(gamma-1)} dy, evaluated by Gauss-Legendre
// after y = sin(phi), which removes the algebraic edge factor.  The closed
// Beta form (1/2) Beta(1/2, p/(gamma-1)+1) serves as the test oracle.
auto shape_moment(double exponent_over_gm1) -> double {
  static const std::vector<QuadNode> rule = gauss_legendre(256);
  double sum = 0.0;
  for (const QuadNode& n : rule) {
    const double phi = 0.25 * M_PI * (n.x + 1.0);
    const double c = std::cos(phi);
    sum += n.w * std::pow(c * c, exponent_over_gm1) * c;
  }
  return 0.25 * M_PI * sum;
}

}  // namespace

BarenblattProfile::BarenblattProfile(const GasLaw& gas,
                                     const DampingLaw& damping, double mass,
                                     double A, double B, double s)
    : gas_(gas), damping_(damping), mass_(mass), A_(A), B_(B), s_(s) {}

BarenblattProfile BarenblattProfile::from_mass(const GasLaw& gas,
                                               const DampingLaw& damping,
                                               double mass) {
  if (!(mass > 0.0))
    throw std::domain_error("BarenblattProfile: mass must be > 0");
  const double g = gas.gamma();
  const double lam = damping.lambda();
  const double s = (lam + 1.0) / (g + 1.0);
  const double B = (lam + 1.0) * (g - 1.0) /
                   (2.0 * gas.kappa() * g * (g + 1.0));
  const double I = shape_moment(1.0 / (g - 1.0));
  // M = 2 sqrt(A/B) A^{1/(gamma-1)} I  =>  A = (M sqrt(B) / (2 I))^{2(gamma-1)/(gamma+1)}.
  const double A = std::pow(mass * std::sqrt(B) / (2.0 * I),
                            2.0 * (g - 1.0) / (g + 1.0));
  return BarenblattProfile(gas, damping, mass, A, B, s);
}

double BarenblattProfile::density(double x, double t) const {
  if (!(t >= 0.0)) throw std::domain_error("BarenblattProfile: t must be >= 0");
  const double scale = std::pow(1.0 + t, -s_);
  const double xi = x * scale;
  const double core = A_ - B_ * xi * xi;
  if (core <= 0.0) return 0.0;
  return scale * std::pow(core, 1.0 / (gas_.gamma() - 1.0));
}

double BarenblattProfile::momentum(double x, double t) const {
  return s_ * x * density(x, t) / (1.0 + t);
}

double BarenblattProfile::support_radius(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("BarenblattProfile: t must be >= 0");
  return std::sqrt(A_ / B_) * std::pow(1.0 + t, s_);
}

double BarenblattProfile::lp_norm(double p, double t) const {
  if (!(t >= 0.0)) throw std::domain_error("BarenblattProfile: t must be >= 0");
  const double g = gas_.gamma();
  if (std::isinf(p)) {
    return std::pow(A_, 1.0 / (g - 1.0)) * std::pow(1.0 + t, -s_);
  }
  if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be >= 1");
  const double Ip = shape_moment(p / (g - 1.0));
  const double base = 2.0 * std::sqrt(A_ / B_) * std::pow(A_, p / (g - 1.0)) * Ip;
  return std::pow(base, 1.0 / p) * std::pow(1.0 + t, -s_ * (p - 1.0) / p);
}

double BarenblattProfile::integral(double xl, double xr, double t) const {
  if (xr <= xl) return 0.0;
  if (!(t >= 0.0)) throw std::domain_error("BarenblattProfile: t must be >= 0");
  // In the similarity variable the density integral loses its time factor:
  // integral rho dx = integral (A - B xi^2)_+^{1/(gamma-1)} dxi.
  const double scale = std::pow(1.0 + t, -s_);
  const double r_xi = std::sqrt(A_ / B_);
  const double e = 1.0 / (gas_.gamma() - 1.0);
  const double lo = std::max(xl * scale, -r_xi);
  const double hi = std::min(xr * scale, r_xi);
  if (hi <= lo) return 0.0;
  // A panel hitting a support edge has an algebraic factor with unbounded
  // derivative there; the endpoint-distance channels keep it exact, and the
  // split at 0 means each panel can touch at most one edge.
  const auto piece = [&](double a, double b) -> double {
    if (b <= a) return 0.0;
    const bool left_edge = (a == -r_xi), right_edge = (b == r_xi);
    return tanh_sinh(
        [&](double xi, double dl, double dr) {
          const double up = right_edge ? dr : (r_xi - xi);
          const double dn = left_edge ? dl : (r_xi + xi);
          return std::pow(B_ * up * dn, e);
        },
        a, b);
  };
  const double mid = std::clamp(0.0, lo, hi);
  return piece(lo, mid) + piece(mid, hi);
}

std::vector<double> BarenblattProfile::cell_averages(const Grid& grid,
                                                     double t) const {
  const double R = support_radius(t);
  std::vector<double> avg(grid.n_cells, 0.0);
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    const double xl = grid.x_left + grid.dx * static_cast<double>(i);
    const double xr = xl + grid.dx;
    if (xr <= -R || xl >= R) continue;
    avg[i] = integral(xl, xr, t) / grid.dx;
  }
  return avg;
}

std::vector<double> BarenblattProfile::momentum_cell_averages(const Grid& grid,
                                                              double t) const {
  // m = s x rho / (1+t): reuse the density integrals with the linear factor
  // folded into a dedicated Gauss-Legendre pass per piece.
  const double R = support_radius(t);
  static const std::vector<QuadNode> rule = gauss_legendre(12);
  std::vector<double> avg(grid.n_cells, 0.0);
  const auto piece = [&](double a, double b) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    double sum = 0.0;
    for (const QuadNode& n : rule) {
      const double x = c + r * n.x;
      sum += n.w * momentum(x, t);
    }
    return r * sum;
  };
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    const double xl = grid.x_left + grid.dx * static_cast<double>(i);
    const double xr = xl + grid.dx;
    if (xr <= -R || xl >= R) continue;
    double total = 0.0;
    double lo = std::max(xl, -R);
    const double hi = std::min(xr, R);
    for (const double edge : {-R, R}) {
      if (edge > lo && edge < hi) {
        total += piece(lo, edge);
        lo = edge;
      }
    }
    if (hi > lo) total += piece(lo, hi);
    avg[i] = total / grid.dx;
  }
  return avg;
}

}  // namespace be
