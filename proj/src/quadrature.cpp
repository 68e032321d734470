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

#include "quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace be {

std::vector<QuadNode> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  std::vector<QuadNode> rule(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev angle seeds the Newton iteration on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule[i] = {-x, w};
    rule[n - 1 - i] = {x, w};
  }
  return rule;
}

namespace {

// Jacobi polynomial P_n^(a,b)(x) and its derivative by the three-term
// recurrence; returns {P_n, P_n'}.
struct JacobiEval {
  double p;
  double dp;
};

auto jacobi_eval(int n, double a, double b, double x) -> JacobiEval {
  double p0 = 1.0;
  double p1 = 0.5 * (a - b + (a + b + 2.0) * x);
  if (n == 0) return {p0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double k2ab = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (k2ab - 2.0);
    const double c2 = (k2ab - 1.0) * (a * a - b * b);
    const double c3 = (k2ab - 2.0) * (k2ab - 1.0) * k2ab;
    const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * k2ab;
    const double p2 = ((c2 + c3 * x) * p1 - c4 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  // Derivative from the degree-lowering identity.
  const double dp =
      (n * (a - b - (2.0 * n + a + b) * x) * p1 +
       2.0 * (n + a) * (n + b) * p0) /
      ((2.0 * n + a + b) * (1.0 - x * x));
  return {p1, dp};
}

}  // namespace

std::vector<QuadNode> gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
  std::vector<QuadNode> rule(n);
  double x = 0.0;
  for (int i = 0; i < n; ++i) {
    // Seeds follow the classical pattern: extreme roots from the exponent
    // asymptotics, the rest by stepping from the previous root.
    if (i == 0) {
      const double an = alpha / n, bn = beta / n;
      const double r1 = (1.0 + alpha) * (2.78 / (4.0 + n * n) + 0.768 * an / n);
      const double r2 = 1.0 + 1.48 * an + 0.96 * bn + 0.452 * an * an + 0.83 * an * bn;
      x = 1.0 - r1 / r2;
    } else if (i == 1) {
      const double r1 = (4.1 + alpha) / ((1.0 + alpha) * (1.0 + 0.156 * alpha));
      const double r2 = 1.0 + 0.06 * (n - 8.0) * (1.0 + 0.12 * alpha) / n;
      const double r3 = 1.0 + 0.012 * beta * (1.0 + 0.25 * std::abs(alpha)) / n;
      x -= r1 * r2 * r3 * (1.0 - x);
    } else if (i == 2) {
      const double r1 = (1.67 + 0.28 * alpha) / (1.0 + 0.37 * alpha);
      const double r2 = 1.0 + 0.22 * (n - 8.0) / n;
      const double r3 = 1.0 + 8.0 * beta / ((6.28 + beta) * n * n);
      x -= r1 * r2 * r3 * (rule[0].x - x);
    } else if (i == n - 2) {
      const double r1 = (1.0 + 0.235 * beta) / (0.766 + 0.119 * beta);
      const double r2 = 1.0 / (1.0 + 0.639 * (n - 4.0) / (1.0 + 0.71 * (n - 4.0)));
      const double r3 = 1.0 / (1.0 + 20.0 * alpha / ((7.5 + alpha) * n * n));
      x += r1 * r2 * r3 * (x - rule[i - 2].x);
    } else if (i == n - 1) {
      const double r1 = (1.0 + 0.37 * beta) / (1.67 + 0.28 * beta);
      const double r2 = 1.0 / (1.0 + 0.22 * (n - 8.0) / n);
      const double r3 = 1.0 / (1.0 + 8.0 * alpha / ((6.28 + alpha) * n * n));
      x += r1 * r2 * r3 * (x - rule[i - 2].x);
    } else {
      x = 3.0 * rule[i - 1].x - 3.0 * rule[i - 2].x + rule[i - 3].x;
    }
    double dp = 0.0;
    for (int it = 0; it < 200; ++it) {
      // Deflate previously found roots so Newton converges to a fresh one.
      const JacobiEval pe = jacobi_eval(n, alpha, beta, x);
      dp = pe.dp;
      double defl = 0.0;
      for (int j = 0; j < i; ++j) defl += 1.0 / (x - rule[j].x);
      const double dx = pe.p / (pe.dp - pe.p * defl);
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double lnw = std::lgamma(alpha + n) + std::lgamma(beta + n) -
                       std::lgamma(n + 1.0) - std::lgamma(n + alpha + beta + 1.0);
    const JacobiEval prev = jacobi_eval(n - 1, alpha, beta, x);
    const double w = std::exp(lnw) * (2.0 * n + alpha + beta) *
                     std::pow(2.0, alpha + beta) / (dp * prev.p);
    rule[i] = {x, w};
  }
  // The classical algorithm produces descending nodes; ascend for callers.
  for (int i = 0, j = n - 1; i < j; ++i, --j) std::swap(rule[i], rule[j]);
  return rule;
}

double log_beta(double p, double q) {
  if (p <= 0.0 || q <= 0.0)
    throw std::domain_error("log_beta: arguments must be positive");
  return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
}

double beta_function(double p, double q) { return std::exp(log_beta(p, q)); }

double tanh_sinh(const SingularIntegrand& f, double a, double b,
                 double rel_tol, int max_level) {
  if (!(b > a)) throw std::invalid_argument("tanh_sinh: requires b > a");
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  // Past |t| ~ 3.8 the node distance to the endpoint underflows double
  // precision; contributions there are below 1e-300.
  const double t_max = 3.8;

  const auto eval = [&](double t) -> double {
    const double s = 0.5 * M_PI * std::sinh(t);
    const double ch = std::cosh(s);
    const double u = std::tanh(s);
    // 1 -+ tanh(s) without cancellation.
    const double dr = r * std::exp(-s) / ch;   // b - x
    const double dl = r * std::exp(s) / ch;    // x - a
    const double x = c + r * u;
    const double w = r * 0.5 * M_PI * std::cosh(t) / (ch * ch);
    const double v = f(x, dl, dr);
    return std::isfinite(v) ? w * v : 0.0;
  };

  double h = 1.0;
  double sum = eval(0.0);
  {
    double t = h;
    while (t <= t_max) {
      sum += eval(t) + eval(-t);
      t += h;
    }
  }
  double integral = h * sum;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    double t = h;
    while (t <= t_max) {
      add += eval(t) + eval(-t);
      t += 2.0 * h;
    }
    sum += add;
    const double next = h * sum;
    const double err = std::abs(next - integral);
    integral = next;
    if (level >= 3 && err <= rel_tol * std::max(std::abs(integral), 1e-300))
      return integral;
  }
  return integral;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_level) {
  return tanh_sinh([&f](double x, double, double) { return f(x); }, a, b,
                   rel_tol, max_level);
}

double tanh_sinh_piecewise(const SingularIntegrand& f,
                           const std::vector<double>& breakpoints,
                           double rel_tol) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("tanh_sinh_piecewise: need >= 2 breakpoints");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i], b = breakpoints[i + 1];
    if (b <= a) continue;
    total += tanh_sinh(f, a, b, rel_tol);
  }
  return total;
}

}  // namespace be
