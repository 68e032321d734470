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

#include "config.hpp"
#include "euler.hpp"
#include "rates.hpp"

namespace be {

// Everything a finished experiment left on disk, relative to `directory`.
struct RunArtifacts {
  std::string directory;
  std::vector<std::string> files;
};

// Output directory precedence: explicit override, then the BE_OUTPUT_DIR
// environment variable, then the config's output_dir.
std::string resolve_output_dir(const ExperimentConfig& config, const std::string& override_dir);

// Snapshot times t_k = (1 + t0) * ratio^k - 1 capped at (and including) t_end.
std::vector<double> geometric_output_times(double t0, double t_end, double ratio);

// Turns the flat experiment description into a solver description: gas and
// damping laws, auto-sized symmetric grid, realized initial-data parameters,
// and the geometric snapshot schedule.
SolverConfig build_solver_config(const ExperimentConfig& config);

// Single hyperbolic run: writes resolved-config.txt, diagnostics.csv,
// snapshot_###.csv (x,rho,mom), and manifest.json into `directory`.
RunArtifacts execute_run(const ExperimentConfig& config, const std::string& directory);

// Porous-medium march of the same initial density in rescaled time: writes
// resolved-config.txt, pme_diagnostics.csv, pme_snapshot_###.csv (x,rho),
// and manifest.json.
RunArtifacts execute_pme(const ExperimentConfig& config, const std::string& directory);

// Dispatch on config.mode, expanding sweep.gamma x sweep.lambda into one
// subdirectory per pair plus a top-level manifest.
RunArtifacts execute(const ExperimentConfig& config, const std::string& override_dir);

// Exact profile sampled on [-1.1 R(t), 1.1 R(t)] as columns x,rho,mom.
void emit_barenblatt_csv(double gamma, double lambda, double mass, double time,
                         std::size_t samples, const std::string& path);

// Fits log(column) against log(1 + t) using the 't' column of a CSV.
DecayFit fit_decay_csv(const std::string& csv_path, const std::string& column, double t_start,
                       double t_end);

}  // namespace be
