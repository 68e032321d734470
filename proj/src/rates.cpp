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

#include "rates.hpp"

#include <algorithm>
#include <cmath>

namespace be {

namespace {

void require_admissible(double gamma, double lambda) {
  if (!(gamma > 1.0) || !(gamma < 3.0))
    throw std::domain_error("rates: gamma must lie in (1, 3)");
  if (!(lambda > 0.0) || !(lambda < 1.0))
    throw std::domain_error("rates: lambda must lie in (0, 1)");
}

}  // namespace

RateResult closed_form_rates(double gamma, double lambda) {
  require_admissible(gamma, lambda);
  const double junction = gamma / (gamma + 2.0);
  RateResult r;
  if (lambda <= junction) {
    r.branch = 1;
    r.mu_tilde = 1.0 + lambda - (lambda + 1.0) / (2.0 * (gamma + 1.0));
    r.alpha_tilde = (lambda + 1.0) / (4.0 * (gamma + 1.0));
  } else {
    r.branch = 2;
    r.mu_tilde = 1.5 + 0.5 * lambda - (lambda + 1.0) / (gamma + 1.0);
    r.alpha_tilde = 0.25 * (1.0 - lambda);
  }
  return r;
}

RateResult iterate_rates(double gamma, double lambda, double tol,
                         int max_iter) {
  require_admissible(gamma, lambda);
  if (!(tol > 0.0)) throw std::domain_error("iterate_rates: tol must be > 0");
  if (max_iter < 2)
    throw std::domain_error("iterate_rates: max_iter must be >= 2");
  const double base = 1.0 + 0.5 * lambda - (lambda + 1.0) / (2.0 * (gamma + 1.0));
  const double theta_cap = std::min(lambda, (gamma - lambda) / (gamma + 1.0));
  std::vector<std::pair<double, double>> trace;
  double theta = 0.0;
  for (int k = 0; k < max_iter; ++k) {
    const double mu = std::min(1.0 + theta, base + 0.5 * theta);
    // A repeated exponent means the fixed point is reached; the trace keeps
    // only the distinct iterates.
    if (!trace.empty() && std::abs(mu - trace.back().first) < tol) {
      RateResult r = closed_form_rates(gamma, lambda);
      r.mu_tilde = mu;
      r.trace = std::move(trace);
      return r;
    }
    theta = std::min(mu - lambda, theta_cap);
    trace.emplace_back(mu, theta);
  }
  throw RateIterationError("iterate_rates: no convergence within max_iter",
                           std::move(trace));
}

std::vector<double> y_potential(const std::vector<double>& rho,
                                const std::vector<double>& rho_bar, double dx) {
  if (rho.size() != rho_bar.size())
    throw std::invalid_argument("y_potential: size mismatch");
  std::vector<double> y(rho.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    acc += rho[i] - rho_bar[i];
    y[i] = -dx * acc;
  }
  return y;
}

GapNorms gap_norms(const std::vector<double>& rho,
                   const std::vector<double>& rho_bar, double dx, double gamma,
                   const std::vector<double>& p_list) {
  if (rho.size() != rho_bar.size())
    throw std::invalid_argument("gap_norms: size mismatch");
  GapNorms out;
  out.lp_pow.assign(p_list.size(), 0.0);
  out.l1 = 0.0;
  out.linf = 0.0;
  out.weighted = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double d = std::abs(rho[i] - rho_bar[i]);
    out.l1 += d;
    out.linf = std::max(out.linf, d);
    out.weighted += std::pow(rho_bar[i], gamma - 1.0) * d * d;
    for (std::size_t k = 0; k < p_list.size(); ++k)
      out.lp_pow[k] += std::pow(d, p_list[k]);
  }
  out.l1 *= dx;
  out.weighted *= dx;
  for (double& v : out.lp_pow) v *= dx;
  return out;
}

DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& value,
                   double t_start, double t_end) {
  if (t.size() != value.size())
    throw std::invalid_argument("fit_decay: size mismatch");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_start || t[i] > t_end) continue;
    if (!(value[i] > 0.0))
      throw std::domain_error("fit_decay: values must be positive in the window");
    xs.push_back(std::log1p(t[i]));
    ys.push_back(std::log(value[i]));
  }
  if (xs.size() < 3)
    throw std::domain_error("fit_decay: window must contain >= 3 points");
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0)
    throw std::domain_error("fit_decay: degenerate window (single abscissa)");
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  // A flat series has only rounding-level variance; call that a perfect fit
  // rather than dividing noise by noise.
  const double y_scale = std::max(1.0, std::abs(my));
  const double var_floor =
      static_cast<double>(n) * (1e-14 * y_scale) * (1e-14 * y_scale);
  fit.r_squared = (syy <= var_floor) ? 1.0 : 1.0 - ss_res / syy;
  fit.t_start = t_start;
  fit.t_end = t_end;
  fit.n_points = n;
  return fit;
}

}  // namespace be
