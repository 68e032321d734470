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

#include <string>
#include <vector>

namespace be {

// Flat key = value experiment description.  '#' starts a comment, blank lines
// are skipped, unknown or duplicate keys are rejected with the offending name.
struct ExperimentConfig {
  std::string mode = "run";  // run | pme
  double gamma = 0.0;        // required, (1, 3)
  double lambda = 0.0;       // required, (0, 1)
  double mass = 0.0;         // required for profile-based initial data
  std::size_t cells = 2000;
  double domain_half_width_factor = 1.5;
  double domain_half_width = 0.0;  // 0 = auto-sized
  double cfl = 0.45;
  double t_end = 0.0;  // required
  double snapshot_ratio = 1.3;
  double dry_threshold = 1e-12;
  double max_dt = 0.0;
  unsigned long seed = 0;
  std::string output_dir = "out";

  std::string initial_kind = "barenblatt";
  double initial_t0 = 0.0;
  double initial_amplitude = 0.3;
  double initial_wavelength = 0.0;  // 0 = support radius at t0
  std::vector<double> initial_centers{-2.0, 2.0};
  std::vector<double> initial_widths{1.0, 1.0};
  std::vector<double> initial_heights{0.5, 0.5};
  double initial_rho_left = 1.0, initial_u_left = 0.0;
  double initial_rho_right = 0.125, initial_u_right = 0.0;
  std::string initial_table;  // CSV path for tabulated data

  std::vector<double> sweep_gamma;
  std::vector<double> sweep_lambda;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Canonical emission: every key, fixed order, 17 significant digits.
// Reparsing the result reproduces the same configuration.
std::string format_config(const ExperimentConfig& config);

}  // namespace be
