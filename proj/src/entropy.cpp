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

#include "entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace be {

namespace {

// |xi|^e with a fast path when e is an (even) integer, as it is for
// gamma = 2 (e = 4) and gamma = 1.5 (e = 6).
struct PowerGenerator {
  double e;
  int ie;          // rounded exponent, valid when integral
  bool integral;

  explicit PowerGenerator(double exponent) : e(exponent) {
    ie = static_cast<int>(std::lround(e));
    integral = std::abs(e - ie) < 1e-12;
  }

  double value(double xi) const {
    if (integral) {
      double a = std::abs(xi), r = 1.0;
      for (int k = 0; k < ie; ++k) r *= a;
      return r;
    }
    return std::pow(std::abs(xi), e);
  }
  double deriv(double xi) const {
    if (xi == 0.0) return 0.0;  // e > 3 for admissible gamma
    if (integral) {
      double a = std::abs(xi), r = 1.0;
      for (int k = 0; k < ie - 1; ++k) r *= a;
      return e * r * (xi > 0.0 ? 1.0 : -1.0);
    }
    return e * std::pow(std::abs(xi), e - 1.0) * (xi > 0.0 ? 1.0 : -1.0);
  }
  double deriv2(double xi) const {
    if (xi == 0.0) return 0.0;
    if (integral) {
      double a = std::abs(xi), r = 1.0;
      for (int k = 0; k < ie - 2; ++k) r *= a;
      return e * (e - 1.0) * r;
    }
    return e * (e - 1.0) * std::pow(std::abs(xi), e - 2.0);
  }
};

// Integral over [-1, 1] of f(z) (1-z^2)^l by tanh-sinh, split at the interior
// kink locations so every piece is smooth inside.  Kinks must be strictly
// inside (-1, 1) and sorted.
auto kernel_integral(double l, const std::vector<double>& kinks,
                     const std::function<double(double)>& f) -> double {
  std::vector<double> pts{-1.0};
  for (double k : kinks)
    if (k > -1.0 + 1e-14 && k < 1.0 - 1e-14) pts.push_back(k);
  pts.push_back(1.0);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    if (b - a < 1e-300) continue;
    const bool left_end = (i == 0);             // a == -1
    const bool right_end = (i + 2 == pts.size());  // b == +1
    total += tanh_sinh(
        [&](double z, double dl, double dr) {
          const double one_plus = left_end ? dl : 1.0 + z;
          const double one_minus = right_end ? dr : 1.0 - z;
          const double w = one_plus * one_minus;
          if (w <= 0.0) return 0.0;
          return f(z) * std::pow(w, l);
        },
        a, b, 1e-13);
  }
  return total;
}

}  // namespace

EntropyConstants EntropyConstants::for_gas(const GasLaw& gas) {
  const double g = gas.gamma();
  const double p = (g + 1.0) / (2.0 * (g - 1.0));
  const double c1 = 0.5 * beta_function(p, p);
  const double c2 = 2.0 * g * (g + 1.0) / ((g - 1.0) * (g - 1.0)) * c1;
  return {c1, c2};
}

double mechanical_energy(const GasLaw& gas, double rho, double m) {
  if (!(rho >= 0.0))
    throw std::domain_error("mechanical_energy: rho must be >= 0");
  if (rho == 0.0) {
    if (m != 0.0)
      throw std::domain_error("mechanical_energy: nonzero momentum at vacuum");
    return 0.0;
  }
  return 0.5 * m * m / rho +
         gas.kappa() * std::pow(rho, gas.gamma()) / (gas.gamma() - 1.0);
}

double chi(const GasLaw& gas, double xi, double rho, double u) {
  if (!(rho >= 0.0)) throw std::domain_error("chi: rho must be >= 0");
  const double d = xi - u;
  const double core = std::pow(rho, gas.gamma() - 1.0) - d * d;
  if (core <= 0.0) return 0.0;
  return std::pow(core, gas.kernel_exponent());
}

EntropyPair weak_entropy(const GasLaw& gas,
                         const std::function<double(double)>& g, double rho,
                         double u, int n) {
  if (!(rho >= 0.0)) throw std::domain_error("weak_entropy: rho must be >= 0");
  if (rho == 0.0) return {0.0, 0.0};
  const double l = gas.kernel_exponent();
  const std::vector<QuadNode> rule = gauss_jacobi(n, l, l);
  const double off = std::pow(rho, gas.theta());
  double eta = 0.0, q = 0.0;
  for (const QuadNode& node : rule) {
    const double xi = u + node.x * off;
    const double gv = g(xi);
    eta += node.w * gv;
    q += node.w * gv * (u + gas.theta() * node.x * off);
  }
  return {rho * eta, rho * q};
}

TildeEta tilde_eta(const GasLaw& gas, const EntropyConstants& consts,
                   double rho, double m) {
  if (!(rho >= 0.0)) throw std::domain_error("tilde_eta: rho must be >= 0");
  if (!std::isfinite(m)) throw std::domain_error("tilde_eta: m must be finite");
  if (rho == 0.0) {
    if (m != 0.0)
      throw std::domain_error("tilde_eta: nonzero momentum at vacuum");
    return {0.0, 0.0};
  }
  const double g = gas.gamma();
  const PowerGenerator gen(2.0 * g / (g - 1.0));
  const double off = std::pow(rho, gas.theta());
  const double u = m / rho;
  const double zstar = -u / off;  // sign change of u + z rho^theta
  const double value =
      rho * kernel_integral(gas.kernel_exponent(), {zstar},
                            [&](double z) { return gen.value(u + z * off); });
  const double remainder =
      value - consts.c1 * std::pow(rho, g + 1.0) - consts.c2 * m * m;
  return {value, remainder};
}

double tilde_eta_rule(const GasLaw& gas, const std::vector<QuadNode>& rule,
                      double rho, double m) {
  if (rho <= 0.0) return 0.0;
  const double g = gas.gamma();
  const PowerGenerator gen(2.0 * g / (g - 1.0));
  const double off = std::pow(rho, gas.theta());
  const double u = m / rho;
  double sum = 0.0;
  for (const QuadNode& node : rule) sum += node.w * gen.value(u + node.x * off);
  return rho * sum;
}

double remainder_integral(const GasLaw& gas, double rho, double m) {
  if (!(rho >= 0.0))
    throw std::domain_error("remainder_integral: rho must be >= 0");
  if (rho == 0.0) return 0.0;
  const double g = gas.gamma();
  const PowerGenerator gen(2.0 * g / (g - 1.0));
  const double off = std::pow(rho, gas.theta());
  const double u = m / rho;
  const double zstar = -u / off;
  std::vector<double> kinks{std::min(zstar, 0.0), std::max(zstar, 0.0)};
  const double integral = kernel_integral(
      gas.kernel_exponent(), kinks, [&](double z) {
        const double base = z * off;
        return gen.value(u + base) - gen.value(base) - gen.deriv(base) * u -
               0.5 * gen.deriv2(base) * u * u;
      });
  return rho * integral;
}

RemainderCheck check_remainder_inequalities(const GasLaw& gas,
                                            const EntropyConstants& consts,
                                            double rho, double u, double h) {
  if (!(rho > 0.0))
    throw std::domain_error("check_remainder_inequalities: rho must be > 0");
  if (!(h > 0.0))
    throw std::domain_error("check_remainder_inequalities: h must be > 0");
  const double m = rho * u;
  const TildeEta te = tilde_eta(gas, consts, rho, m);
  const double a = te.remainder;
  const double ap = tilde_eta(gas, consts, rho, m + h).remainder;
  const double am = tilde_eta(gas, consts, rho, m - h).remainder;
  const double am_m = m * (ap - am) / (2.0 * h);
  const double scale = std::max(1.0, te.value);
  const double tol = std::max(1e-8, 10.0 * h * h * scale);
  return {a, am_m, tol, a >= -tol, am_m >= 3.0 * a - tol};
}

double relative_entropy(const GasLaw& gas, const EntropyConstants& consts,
                        double rho, double m, double rho_bar) {
  if (!(rho_bar >= 0.0))
    throw std::domain_error("relative_entropy: rho_bar must be >= 0");
  const double g = gas.gamma();
  const double eta = (rho == 0.0 && m == 0.0)
                         ? 0.0
                         : tilde_eta(gas, consts, rho, m).value;
  return eta - consts.c1 * std::pow(rho_bar, g + 1.0) -
         consts.c1 * (g + 1.0) * std::pow(rho_bar, g) * (rho - rho_bar);
}

}  // namespace be
