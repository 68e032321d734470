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

#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "be/be.h"

// ---------------------------------------------------------------------------
// Error plumbing
// ---------------------------------------------------------------------------

namespace {

// Prints the library's last error and converts the status to an exit code.
auto finish(be_status status) -> int {
  if (status == BE_OK) return 0;
  std::fprintf(stderr, "error (%s): %s\n", be_status_name(status), be_last_error_message());
  return 1;
}

auto run_experiment(const std::string& config_path, const char* mode,
                    const std::string& output_dir) -> int {
  char resolved[4096];
  const be_status status = be_run(config_path.c_str(), mode,
                                  output_dir.empty() ? nullptr : output_dir.c_str(), resolved,
                                  sizeof resolved);
  if (status == BE_OK) std::printf("wrote %s\n", resolved);
  return finish(status);
}

auto show_rates(double gamma, double lambda) -> int {
  be_rates_result* result = nullptr;
  be_status status = be_rates_compute(gamma, lambda, &result);
  if (status != BE_OK) return finish(status);
  double mu = 0.0, alpha = 0.0;
  int branch = 0;
  size_t n = 0;
  status = be_rates_values(result, &mu, &alpha, &branch);
  if (status == BE_OK) status = be_rates_trace_size(result, &n);
  if (status == BE_OK) {
    std::printf("gamma = %.17g, lambda = %.17g\n", gamma, lambda);
    std::printf("mu_tilde = %.17g\nalpha_tilde = %.17g\nbranch = %d\n", mu, alpha, branch);
    std::printf("trace (mu, theta):\n");
    for (size_t k = 0; k < n && status == BE_OK; ++k) {
      double tmu = 0.0, ttheta = 0.0;
      status = be_rates_trace_entry(result, k, &tmu, &ttheta);
      if (status == BE_OK) std::printf("  %.17g  %.17g\n", tmu, ttheta);
    }
  }
  be_rates_result_destroy(result);
  return finish(status);
}

auto show_fit(const std::string& csv, const std::string& column, double t_start,
              double t_end) -> int {
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
  const be_status status =
      be_fit_decay_csv(csv.c_str(), column.c_str(), t_start, t_end, &slope, &intercept, &r2);
  if (status == BE_OK) {
    std::printf("column = %s, window = [%.17g, %.17g]\n", column.c_str(), t_start, t_end);
    std::printf("slope = %.17g\nintercept = %.17g\nr_squared = %.17g\n", slope, intercept, r2);
  }
  return finish(status);
}

auto show_profile(double gamma, double lambda, double mass, double time, size_t samples,
                  const std::string& path) -> int {
  be_profile* profile = nullptr;
  be_status status = be_profile_create(gamma, lambda, mass, &profile);
  if (status != BE_OK) return finish(status);
  double a = 0.0, b = 0.0, s = 0.0, radius = 0.0;
  status = be_profile_params(profile, &a, &b, &s);
  if (status == BE_OK) status = be_profile_support_radius(profile, time, &radius);
  be_profile_destroy(profile);
  if (status == BE_OK) {
    status = be_emit_profile_csv(gamma, lambda, mass, time, samples, path.c_str());
  }
  if (status == BE_OK) {
    std::printf("amplitude = %.17g\nshape = %.17g\nexponent = %.17g\n", a, b, s);
    std::printf("support_radius(%.17g) = %.17g\n", time, radius);
    std::printf("wrote %s (%zu samples)\n", path.c_str(), samples);
  }
  return finish(status);
}

void print_criterion(int id, const char* name, int pass, const char* detail, double seconds,
                     void* /*user*/) {
  std::printf("[%s] %2d %-28s (%.2fs) %s\n", pass ? "PASS" : "FAIL", id, name, seconds, detail);
  std::fflush(stdout);
}

auto run_validation(bool quick) -> int {
  int passed = 0, failed = 0;
  const be_status status = be_validate(quick ? 1 : 0, print_criterion, nullptr, &passed, &failed);
  std::printf("%d passed, %d failed\n", passed, failed);
  if (status != BE_OK && failed == 0) return finish(status);  // infrastructure failure
  return failed == 0 ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{"Laboratory for damped isentropic gas flow and self-similar spreading"};
  app.require_subcommand(1);

  std::string run_config, run_out;
  CLI::App* cmd_run = app.add_subcommand("run", "Evolve a config with the hyperbolic solver");
  cmd_run->add_option("config", run_config, "key = value config file")->required();
  cmd_run->add_option("--output-dir", run_out, "overrides BE_OUTPUT_DIR and the config");

  std::string pme_config, pme_out;
  CLI::App* cmd_pme =
      app.add_subcommand("pme", "March the same initial density with the porous-medium solver");
  cmd_pme->add_option("config", pme_config, "key = value config file")->required();
  cmd_pme->add_option("--output-dir", pme_out, "overrides BE_OUTPUT_DIR and the config");

  double b_gamma = 2.0, b_lambda = 0.5, b_mass = 1.0, b_time = 0.0;
  std::size_t b_samples = 1001;
  std::string b_path = "barenblatt.csv";
  CLI::App* cmd_bar =
      app.add_subcommand("barenblatt", "Sample the exact self-similar profile to CSV");
  cmd_bar->add_option("--gamma", b_gamma, "adiabatic exponent in (1, 3)")->required();
  cmd_bar->add_option("--lambda", b_lambda, "damping decay exponent in [0, 1)")->required();
  cmd_bar->add_option("--mass", b_mass, "total mass (default 1)");
  cmd_bar->add_option("--time", b_time, "sampling time (default 0)");
  cmd_bar->add_option("--samples", b_samples, "sample count (default 1001)");
  cmd_bar->add_option("--output", b_path, "CSV path (default barenblatt.csv)");

  double r_gamma = 0.0, r_lambda = 0.0;
  CLI::App* cmd_rates =
      app.add_subcommand("rates", "Decay exponents: closed form plus iteration trace");
  CLI::Option* opt_gamma = cmd_rates->add_option("--gamma", r_gamma, "adiabatic exponent");
  CLI::Option* opt_lambda = cmd_rates->add_option("--lambda", r_lambda, "damping exponent");

  std::string f_csv, f_column = "lgp1_gap";
  double f_start = 0.0, f_end = INFINITY;
  CLI::App* cmd_fit =
      cmd_rates->add_subcommand("fit", "Fit log(column) vs log(1+t) from a diagnostics CSV");
  cmd_fit->add_option("csv", f_csv, "diagnostics CSV with a t column")->required();
  cmd_fit->add_option("--column", f_column, "column to fit (default lgp1_gap)");
  cmd_fit->add_option("--t-start", f_start, "window start (default 0)");
  cmd_fit->add_option("--t-end", f_end, "window end (default unbounded)");

  bool quick = false;
  CLI::App* cmd_validate = app.add_subcommand("validate", "Run the acceptance suite");
  cmd_validate->add_flag("--quick", quick, "only the sub-minute criteria");

  CLI11_PARSE(app, argc, argv);

  if (cmd_run->parsed()) return run_experiment(run_config, "run", run_out);
  if (cmd_pme->parsed()) return run_experiment(pme_config, "pme", pme_out);
  if (cmd_bar->parsed()) {
    return show_profile(b_gamma, b_lambda, b_mass, b_time, b_samples, b_path);
  }
  if (cmd_rates->parsed()) {
    if (cmd_fit->parsed()) return show_fit(f_csv, f_column, f_start, f_end);
    if (!*opt_gamma || !*opt_lambda) {
      std::fprintf(stderr, "rates: need --gamma and --lambda (or the fit subcommand)\n");
      return 1;
    }
    return show_rates(r_gamma, r_lambda);
  }
  if (cmd_validate->parsed()) return run_validation(quick);
  return 1;
}
