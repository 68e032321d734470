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

#include <be/be.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("be_capi_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

static auto write_file(const fs::path& p, const std::string& text) -> void {
  std::ofstream out(p, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

struct CriterionRecord {
  int id;
  std::string name;
  int pass;
  std::string detail;
};

static void record_criterion(int id, const char* name, int pass, const char* detail,
                             double seconds, void* user) {
  (void)seconds;
  auto* sink = static_cast<std::vector<CriterionRecord>*>(user);
  sink->push_back({id, name != nullptr ? name : "", pass, detail != nullptr ? detail : ""});
}

TEST_SUITE_BEGIN("capi");

TEST_CASE("status names and version string") {
  CHECK(std::string(be_status_name(BE_OK)) == "BE_OK");
  CHECK(std::string(be_status_name(BE_ERR_DOMAIN)) == "BE_ERR_DOMAIN");
  CHECK(std::string(be_status_name(BE_ERR_IO)) == "BE_ERR_IO");
  CHECK(std::string(be_version()) == "1.0.0");
}

TEST_CASE("gas handle: constants and the high-moment entropy") {
  be_gas* gas = nullptr;
  REQUIRE(be_gas_create(2.0, &gas) == BE_OK);
  REQUIRE(gas != nullptr);
  CHECK(std::string(be_last_error_message()).empty());

  double kappa = 0.0, theta = 0.0, c1 = 0.0, c2 = 0.0;
  CHECK(be_gas_kappa(gas, &kappa) == BE_OK);
  CHECK(kappa == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(be_gas_theta(gas, &theta) == BE_OK);
  CHECK(theta == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(be_entropy_constants(gas, &c1, &c2) == BE_OK);
  CHECK(c1 == doctest::Approx(M_PI / 16.0).epsilon(1e-12));
  CHECK(c2 == doctest::Approx(3.0 * M_PI / 4.0).epsilon(1e-12));

  double value = 0.0, remainder = 0.0;
  CHECK(be_tilde_eta(gas, 1.0, 1.0, &value, &remainder) == BE_OK);
  CHECK(value == doctest::Approx(21.0 * M_PI / 16.0).epsilon(1e-10));
  CHECK(remainder == doctest::Approx(M_PI / 2.0).epsilon(1e-9));

  // Domain failure leaves a readable thread-local message.
  CHECK(be_tilde_eta(gas, -1.0, 0.0, &value, &remainder) == BE_ERR_DOMAIN);
  CHECK(!std::string(be_last_error_message()).empty());
  be_gas_destroy(gas);

  be_gas* bad = nullptr;
  CHECK(be_gas_create(3.5, &bad) == BE_ERR_DOMAIN);
  CHECK(bad == nullptr);
  CHECK(be_gas_create(2.0, nullptr) == BE_ERR_INVALID_ARGUMENT);
  CHECK(be_gas_kappa(nullptr, &kappa) == BE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("profile handle: parameters and evaluations") {
  be_profile* profile = nullptr;
  REQUIRE(be_profile_create(2.0, 0.5, 1.0, &profile) == BE_OK);

  const double amp = std::pow(0.75, 2.0 / 3.0);
  double a = 0.0, b = 0.0, s = 0.0;
  CHECK(be_profile_params(profile, &a, &b, &s) == BE_OK);
  CHECK(a == doctest::Approx(amp).epsilon(1e-12));
  CHECK(b == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s == doctest::Approx(0.5).epsilon(1e-15));

  double out = 0.0;
  CHECK(be_profile_density(profile, 0.0, 0.0, &out) == BE_OK);
  CHECK(out == doctest::Approx(amp).epsilon(1e-12));
  CHECK(be_profile_momentum(profile, 0.5, 0.0, &out) == BE_OK);
  CHECK(out == doctest::Approx(0.25 * (amp - 0.25)).epsilon(1e-12));
  CHECK(be_profile_support_radius(profile, 0.0, &out) == BE_OK);
  CHECK(out == doctest::Approx(std::sqrt(amp)).epsilon(1e-12));
  CHECK(be_profile_lp_norm(profile, 1.0, 0.0, &out) == BE_OK);
  CHECK(out == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(be_profile_lp_norm(profile, INFINITY, 3.0, &out) == BE_OK);
  CHECK(out == doctest::Approx(0.5 * amp).epsilon(1e-12));
  be_profile_destroy(profile);

  be_profile* bad = nullptr;
  CHECK(be_profile_create(2.0, 0.5, -1.0, &bad) == BE_ERR_DOMAIN);
  CHECK(be_profile_create(2.0, 1.0, 1.0, &bad) == BE_ERR_DOMAIN);
  CHECK(be_profile_density(nullptr, 0.0, 0.0, &out) == BE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("rates handle: closed-form values and the iteration trace") {
  be_rates_result* rates = nullptr;
  REQUIRE(be_rates_compute(2.0, 0.2, &rates) == BE_OK);
  double mu = 0.0, alpha = 0.0;
  int branch = 0;
  CHECK(be_rates_values(rates, &mu, &alpha, &branch) == BE_OK);
  CHECK(mu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(alpha == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(branch == 1);
  be_rates_result_destroy(rates);

  REQUIRE(be_rates_compute(2.0, 0.8, &rates) == BE_OK);
  CHECK(be_rates_values(rates, &mu, &alpha, &branch) == BE_OK);
  CHECK(mu == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(alpha == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(branch == 2);
  size_t n = 0;
  CHECK(be_rates_trace_size(rates, &n) == BE_OK);
  REQUIRE(n == 3);
  double theta = 0.0;
  CHECK(be_rates_trace_entry(rates, 2, &mu, &theta) == BE_OK);
  CHECK(mu == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(theta == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(be_rates_trace_entry(rates, 3, &mu, &theta) == BE_ERR_INVALID_ARGUMENT);
  be_rates_result_destroy(rates);

  CHECK(be_rates_compute(2.0, 1.0, &rates) == BE_ERR_DOMAIN);
}

TEST_CASE("damping factor spots and gates") {
  double out = 0.0;
  CHECK(be_damping_factor(0.5, 0.0, 3.0, &out) == BE_OK);
  CHECK(out == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(be_damping_factor(0.0, 5.0, 1.25, &out) == BE_OK);
  CHECK(out == doctest::Approx(std::exp(-1.25)).epsilon(1e-14));
  CHECK(be_damping_factor(0.5, -1.0, 1.0, &out) == BE_ERR_DOMAIN);
  CHECK(be_damping_factor(0.5, 0.0, 1.0, nullptr) == BE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("profile CSV emission and decay fitting") {
  TempDir tmp("csv");
  const std::string prof = tmp.str() + "/profile.csv";
  REQUIRE(be_emit_profile_csv(2.0, 0.5, 1.0, 0.0, 51, prof.c_str()) == BE_OK);
  CHECK(fs::exists(prof));

  const std::string decay = tmp.str() + "/decay.csv";
  std::string text = "t,l1_gap\n";
  for (int i = 0; i < 10; ++i) {
    const double t = 1.0 + 2.0 * i;
    text += std::to_string(t) + "," + std::to_string(2.0 * std::pow(1.0 + t, -0.5)) + "\n";
  }
  write_file(decay, text);
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
  REQUIRE(be_fit_decay_csv(decay.c_str(), "l1_gap", 0.0, 1e9, &slope, &intercept, &r2) ==
          BE_OK);
  CHECK(slope == doctest::Approx(-0.5).epsilon(1e-3));  // %.6f inputs
  CHECK(r2 > 0.999);
  CHECK(be_fit_decay_csv(decay.c_str(), "absent", 0.0, 1e9, &slope, &intercept, &r2) ==
        BE_ERR_PARSE);
  CHECK(be_fit_decay_csv((tmp.str() + "/missing.csv").c_str(), "l1_gap", 0.0, 1e9, &slope,
                         &intercept, &r2) == BE_ERR_IO);
}

TEST_CASE("be_run drives both solver modes from a config file") {
  TempDir tmp("run");
  const std::string cfg = tmp.str() + "/exp.cfg";
  write_file(cfg,
             "gamma = 2.0\nlambda = 0.5\nmass = 1.0\nt_end = 0.6\ncells = 48\n"
             "snapshot_ratio = 2.0\n");

  char resolved[512] = {0};
  const std::string out_run = tmp.str() + "/out_run";
  REQUIRE(be_run(cfg.c_str(), nullptr, out_run.c_str(), resolved, sizeof resolved) == BE_OK);
  CHECK(std::string(resolved) == out_run);
  CHECK(fs::exists(fs::path(out_run) / "manifest.json"));
  CHECK(fs::exists(fs::path(out_run) / "diagnostics.csv"));

  const std::string out_pme = tmp.str() + "/out_pme";
  REQUIRE(be_run(cfg.c_str(), "pme", out_pme.c_str(), resolved, sizeof resolved) == BE_OK);
  CHECK(fs::exists(fs::path(out_pme) / "pme_diagnostics.csv"));

  CHECK(be_run(cfg.c_str(), "euler", out_run.c_str(), nullptr, 0) ==
        BE_ERR_INVALID_ARGUMENT);
  CHECK(be_run((tmp.str() + "/missing.cfg").c_str(), nullptr, out_run.c_str(), nullptr, 0) ==
        BE_ERR_IO);
  write_file(tmp.str() + "/bad.cfg", "gamma = 3.5\nlambda = 0.5\nt_end = 1\n");
  CHECK(be_run((tmp.str() + "/bad.cfg").c_str(), nullptr, out_run.c_str(), nullptr, 0) ==
        BE_ERR_PARSE);
  CHECK(be_run(nullptr, nullptr, nullptr, nullptr, 0) == BE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("quick validation reports each criterion through the callback") {
  std::vector<CriterionRecord> records;
  int n_passed = -1, n_failed = -1;
  const be_status status =
      be_validate(1, record_criterion, &records, &n_passed, &n_failed);
  CHECK(status == BE_OK);
  CHECK(n_failed == 0);
  CHECK(n_passed == static_cast<int>(records.size()));
  REQUIRE(!records.empty());
  for (const auto& r : records) {
    CHECK(r.pass == 1);
    CHECK(!r.name.empty());
    CHECK(!r.detail.empty());
  }
}

TEST_SUITE_END();

}  // namespace
