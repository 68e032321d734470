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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rates.hpp"

namespace be {
namespace {

TEST_SUITE_BEGIN("rates");

TEST_CASE("closed-form spot values at gamma = 2") {
  auto r = closed_form_rates(2.0, 0.2);
  CHECK(r.mu_tilde == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.alpha_tilde == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(r.branch == 1);

  r = closed_form_rates(2.0, 0.5);  // the junction lambda = gamma/(gamma+2)
  CHECK(r.mu_tilde == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(r.alpha_tilde == doctest::Approx(0.125).epsilon(1e-15));

  r = closed_form_rates(2.0, 0.8);
  CHECK(r.mu_tilde == doctest::Approx(1.3).epsilon(1e-15));
  CHECK(r.alpha_tilde == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(r.branch == 2);

  CHECK_THROWS_AS(closed_form_rates(3.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(closed_form_rates(2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(closed_form_rates(2.0, 1.0), std::domain_error);
}

TEST_CASE("branch continuity and the alpha maximum at the junction") {
  for (int i = 0; i < 50; ++i) {
    const double gamma = 1.02 + 1.96 * i / 49.0;
    const double lam = gamma / (gamma + 2.0);
    const double mu1 = 1.0 + lam - (lam + 1.0) / (2.0 * (gamma + 1.0));
    const double mu2 = 1.5 + 0.5 * lam - (lam + 1.0) / (gamma + 1.0);
    const double a1 = (lam + 1.0) / (4.0 * (gamma + 1.0));
    const double a2 = 0.25 * (1.0 - lam);
    CHECK(std::abs(mu1 - mu2) < 1e-12);
    CHECK(std::abs(a1 - a2) < 1e-12);
    CHECK(a1 == doctest::Approx(0.5 / (gamma + 2.0)).epsilon(1e-12));
    // alpha rises toward the junction and falls past it.
    const double below = closed_form_rates(gamma, 0.9 * lam).alpha_tilde;
    const double above = closed_form_rates(gamma, lam + 0.09 * (1.0 - lam)).alpha_tilde;
    CHECK(below < a1);
    CHECK(above < a1);
  }
}

TEST_CASE("iteration reproduces the hand traces at gamma = 2") {
  auto r = iterate_rates(2.0, 0.2);
  CHECK(r.mu_tilde == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].first == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(r.trace[0].second == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(r.trace[1].first == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.trace[1].second == doctest::Approx(0.2).epsilon(1e-15));

  r = iterate_rates(2.0, 0.8);
  CHECK(r.mu_tilde == doctest::Approx(1.3).epsilon(1e-12));
  REQUIRE(r.trace.size() == 3);
  CHECK(r.trace[0].first == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.trace[0].second == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(r.trace[1].first == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(r.trace[1].second == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(r.trace[2].first == doctest::Approx(1.3).epsilon(1e-15));
  CHECK(r.trace[2].second == doctest::Approx(0.4).epsilon(1e-15));

  r = iterate_rates(2.0, 0.5, 1e-12);
  CHECK(r.mu_tilde == doctest::Approx(1.25).epsilon(1e-11));
}

TEST_CASE("iteration limit matches the closed form on a parameter grid") {
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double gamma = 1.05 + 1.9 * i / 19.0;
      const double lambda = 0.025 + 0.95 * j / 19.0;
      const auto it = iterate_rates(gamma, lambda);
      const auto cf = closed_form_rates(gamma, lambda);
      CHECK(std::abs(it.mu_tilde - cf.mu_tilde) < 1e-9);
      CHECK(it.branch == cf.branch);
      CHECK(it.alpha_tilde == doctest::Approx(cf.alpha_tilde).epsilon(1e-12));
      // Traces climb monotonically in both components.
      for (std::size_t k = 1; k < it.trace.size(); ++k) {
        CHECK(it.trace[k].first >= it.trace[k - 1].first - 1e-15);
        CHECK(it.trace[k].second >= it.trace[k - 1].second - 1e-15);
      }
    }
  }
}

TEST_CASE("iteration error paths") {
  CHECK_THROWS_AS(iterate_rates(2.0, 0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(iterate_rates(2.0, 0.5, 1e-12, 1), std::domain_error);
  // Too few sweeps to converge: the error carries the partial trace.
  try {
    iterate_rates(2.0, 0.8, 1e-12, 2);
    CHECK(false);
  } catch (const RateIterationError& e) {
    CHECK(e.trace.size() == 2);
  }
}

TEST_CASE("y_potential telescopes the density gap") {
  const std::vector<double> rho_bar{0.2, 0.6, 0.8, 0.6, 0.2};
  const double dx = 0.5;

  auto y = y_potential(rho_bar, rho_bar, dx);
  for (double v : y) CHECK(v == doctest::Approx(0.0));

  // Equal masses: the last entry telescopes to zero.
  std::vector<double> rho{0.3, 0.5, 0.8, 0.5, 0.3};
  y = y_potential(rho, rho_bar, dx);
  CHECK(y.back() == doctest::Approx(0.0).epsilon(1e-14));
  // Interior: direct cumulative sum oracle.
  CHECK(y[0] == doctest::Approx(-dx * 0.1).epsilon(1e-14));
  CHECK(y[1] == doctest::Approx(-dx * 0.0).epsilon(1e-14));
  CHECK(y[2] == doctest::Approx(-dx * 0.0).epsilon(1e-14));
  CHECK(y[3] == doctest::Approx(dx * 0.1).epsilon(1e-14));

  CHECK_THROWS_AS(y_potential(rho, std::vector<double>(3, 0.0), dx),
                  std::invalid_argument);
}

TEST_CASE("gap_norms spot values") {
  const double gamma = 2.0, dx = 0.25;
  const std::vector<double> rho_bar{0.0, 1.0, 2.0, 1.0};
  const std::vector<double> zero(4, 0.0);

  auto n = gap_norms(rho_bar, rho_bar, dx, gamma, {gamma + 1.0});
  CHECK(n.l1 == doctest::Approx(0.0));
  CHECK(n.linf == doctest::Approx(0.0));
  CHECK(n.weighted == doctest::Approx(0.0));
  CHECK(n.lp_pow[0] == doctest::Approx(0.0));

  // Vacuum against the reference: the L1 gap is the reference mass.
  n = gap_norms(zero, rho_bar, dx, gamma, {2.0});
  CHECK(n.l1 == doctest::Approx(4.0 * dx).epsilon(1e-14));
  CHECK(n.linf == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(n.lp_pow[0] == doctest::Approx((1.0 + 4.0 + 1.0) * dx).epsilon(1e-14));
  CHECK(n.weighted == doctest::Approx((1.0 + 2.0 * 4.0 + 1.0) * dx).epsilon(1e-14));

  // A bump disjoint from the reference support adds exactly its own mass.
  const std::vector<double> bump{0.5, 1.0, 2.0, 1.0};
  n = gap_norms(bump, rho_bar, dx, gamma, {2.0});
  CHECK(n.l1 == doctest::Approx(0.5 * dx).epsilon(1e-14));

  CHECK_THROWS_AS(gap_norms(zero, std::vector<double>(3, 0.0), dx, gamma, {}),
                  std::invalid_argument);
}

TEST_CASE("fit_decay recovers exact power laws") {
  std::vector<double> t, v, vc, vp;
  for (int i = 0; i < 10; ++i) {
    const double ti = 1.0 + 3.0 * i;
    t.push_back(ti);
    v.push_back(3.0 * std::pow(1.0 + ti, -0.7));
    vc.push_back(2.5);
    vp.push_back(3.0 * std::pow(1.0 + ti, -0.7) * (1.0 + 0.01 * std::sin(ti)));
  }

  auto fit = fit_decay(t, v, 0.0, 100.0);
  CHECK(fit.slope == doctest::Approx(-0.7).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.n_points == 10);

  fit = fit_decay(t, vc, 0.0, 100.0);
  CHECK(fit.slope == doctest::Approx(0.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));

  fit = fit_decay(t, vp, 0.0, 100.0);
  CHECK(std::abs(fit.slope + 0.7) < 0.02);

  // Window restriction drops points outside [t_start, t_end].
  fit = fit_decay(t, v, 4.0, 100.0);
  CHECK(fit.n_points == 9);

  CHECK_THROWS_AS(fit_decay(t, std::vector<double>(10, -1.0), 0.0, 100.0),
                  std::domain_error);
  CHECK_THROWS_AS(fit_decay({1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}, 0.0, 1.5),
                  std::domain_error);  // too few points in the window
}

TEST_SUITE_END();

}  // namespace
}  // namespace be
