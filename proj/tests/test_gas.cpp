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
#include <random>
#include <stdexcept>

#include "gas.hpp"

namespace be {
namespace {

TEST_SUITE_BEGIN("gas");

TEST_CASE("GasLaw rejects gamma outside (1, 3)") {
  CHECK_THROWS_AS(GasLaw(1.0), std::domain_error);
  CHECK_THROWS_AS(GasLaw(3.0), std::domain_error);
  CHECK_THROWS_AS(GasLaw(0.5), std::domain_error);
  CHECK_NOTHROW(GasLaw(1.0001));
  CHECK_NOTHROW(GasLaw(2.9999));
}

TEST_CASE("GasLaw derived constants") {
  const GasLaw gas(2.0);
  CHECK(gas.kappa() == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(gas.theta() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gas.kernel_exponent() == doctest::Approx(0.5).epsilon(1e-15));

  const GasLaw gas15(1.5);
  CHECK(gas15.kappa() == doctest::Approx(0.25 / 6.0).epsilon(1e-15));
  CHECK(gas15.theta() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(gas15.kernel_exponent() == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("DampingLaw gates lambda and evaluates the coefficient") {
  CHECK_THROWS_AS(DampingLaw(-0.1), std::domain_error);
  CHECK_THROWS_AS(DampingLaw(1.0), std::domain_error);
  CHECK_NOTHROW(DampingLaw(0.0));  // constant-friction classical limit

  const DampingLaw damping(0.5);
  CHECK(damping.coefficient(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(damping.coefficient(3.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(damping.coefficient(-1.0), std::domain_error);
}

TEST_CASE("Grid geometry") {
  const Grid grid = Grid::symmetric(2.0, 8);
  CHECK(grid.x_left == doctest::Approx(-2.0));
  CHECK(grid.dx == doctest::Approx(0.5));
  CHECK(grid.x_right() == doctest::Approx(2.0));
  CHECK(grid.center(0) == doctest::Approx(-1.75));
  CHECK(grid.center(7) == doctest::Approx(1.75));
  CHECK_THROWS_AS(Grid::symmetric(0.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(Grid::symmetric(1.0, 0), std::invalid_argument);
}

TEST_CASE("pressure and sound speed satisfy c^2 = gamma p / rho") {
  for (double gamma : {1.5, 2.0, 2.5}) {
    const GasLaw gas(gamma);
    for (double rho : {0.1, 0.7, 1.0, 2.3}) {
      const double c = sound_speed(gas, rho);
      const double p = pressure(gas, rho);
      CHECK(c * c == doctest::Approx(gamma * p / rho).epsilon(1e-12));
    }
  }
  const GasLaw gas(1.5);
  CHECK(sound_speed(gas, 4.0) == doctest::Approx(0.25 * std::pow(4.0, 0.25)).epsilon(1e-14));
  CHECK(sound_speed(gas, 0.0) == doctest::Approx(0.0));
  CHECK(sound_speed(GasLaw(2.0), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(pressure(gas, -1.0), std::domain_error);
}

TEST_CASE("velocity applies the dry-cell convention") {
  CHECK(velocity(1.0, 2.0, 1e-12) == doctest::Approx(2.0));
  CHECK(velocity(0.0, 0.0, 1e-12) == doctest::Approx(0.0));
  CHECK(velocity(1e-13, 5.0, 1e-12) == doctest::Approx(0.0));
}

TEST_CASE("riemann_invariants spot values and round trip") {
  const GasLaw gas(2.0);
  auto wz = riemann_invariants(gas, 1.0, 0.0);
  CHECK(wz.w == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(wz.z == doctest::Approx(-1.0).epsilon(1e-15));
  wz = riemann_invariants(gas, 4.0, 1.0);
  CHECK(wz.w == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(wz.z == doctest::Approx(-1.0).epsilon(1e-15));
  wz = riemann_invariants(gas, 0.0, 0.7);
  CHECK(wz.w == doctest::Approx(0.7));
  CHECK(wz.z == doctest::Approx(0.7));
  CHECK_THROWS_AS(riemann_invariants(gas, -1.0, 0.0), std::domain_error);

  // Round trip: rho = ((w-z)/2)^{1/theta}, u = (w+z)/2.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> rho_dist(1e-3, 3.0);
  std::uniform_real_distribution<double> u_dist(-2.0, 2.0);
  for (double gamma : {1.5, 2.0, 2.5}) {
    const GasLaw g(gamma);
    for (int i = 0; i < 200; ++i) {
      const double rho = rho_dist(rng), u = u_dist(rng);
      const auto inv = riemann_invariants(g, rho, u);
      CHECK(inv.w - inv.z >= 0.0);
      const double rho_back = std::pow(0.5 * (inv.w - inv.z), 1.0 / g.theta());
      CHECK(rho_back == doctest::Approx(rho).epsilon(1e-12));
      CHECK(0.5 * (inv.w + inv.z) == doctest::Approx(u).epsilon(1e-12));
    }
  }
}

TEST_CASE("check_pressure_gap spot values") {
  const GasLaw gas(2.0);
  auto r = check_pressure_gap(gas, 0.7, 0.7);
  CHECK(r.gap_product == doctest::Approx(0.0));
  CHECK(r.abs_diff_power == doctest::Approx(0.0));
  CHECK(r.weighted_square == doctest::Approx(0.0));
  CHECK(r.first_inequality);

  r = check_pressure_gap(gas, 1.0, 0.0);
  CHECK(r.gap_product == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.abs_diff_power == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.weighted_square == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.first_inequality);  // equality against vacuum

  r = check_pressure_gap(gas, 1.0, 0.5);
  CHECK(r.gap_product == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(r.abs_diff_power == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(r.weighted_square == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(r.first_inequality);

  CHECK_THROWS_AS(check_pressure_gap(gas, 2.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(check_pressure_gap(gas, -0.1, 0.5), std::domain_error);
}

TEST_CASE("pressure gap first inequality holds on random pairs") {
  std::mt19937 rng(20260819);
  std::uniform_real_distribution<double> dist(0.0, 2.0);
  for (double gamma : {1.2, 1.7, 2.0, 2.6}) {
    const GasLaw gas(gamma);
    for (int i = 0; i < 2000; ++i) {
      const auto r = check_pressure_gap(gas, dist(rng), dist(rng));
      CHECK(r.first_inequality);
    }
  }
}

TEST_SUITE_END();

}  // namespace
}  // namespace be
