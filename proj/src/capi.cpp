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

#include "be/be.h"

#include <cstring>
#include <filesystem>
#include <string>

#include "barenblatt.hpp"
#include "config.hpp"
#include "entropy.hpp"
#include "errors.hpp"
#include "euler.hpp"
#include "gas.hpp"
#include "rates.hpp"
#include "runner.hpp"
#include "validate.hpp"

// Opaque handle bodies: each wraps one core object by value.
struct be_gas {
  be::GasLaw law;
  be::EntropyConstants consts;
};

struct be_profile {
  be::BarenblattProfile profile;
};

struct be_rates_result {
  be::RateResult result;
};

namespace {

thread_local std::string g_last_error;

auto fail(be_status status, const std::string& message) -> be_status {
  g_last_error = message;
  return status;
}

// Translates any escaping exception into a status code; BE_OK clears the
// thread's message.  Catch order goes most-derived first.
template <typename Fn>
auto guarded(Fn&& fn) -> be_status {
  try {
    fn();
    g_last_error.clear();
    return BE_OK;
  } catch (const be::ParseError& e) {
    return fail(BE_ERR_PARSE, e.what());
  } catch (const be::IoError& e) {
    return fail(BE_ERR_IO, e.what());
  } catch (const be::RateIterationError& e) {
    return fail(BE_ERR_NUMERICAL, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(BE_ERR_IO, e.what());
  } catch (const std::domain_error& e) {
    return fail(BE_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(BE_ERR_NUMERICAL, e.what());
  } catch (const std::exception& e) {
    return fail(BE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BE_ERR_INTERNAL, "unknown failure");
  }
}

auto require(bool ok, const char* what) -> void {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

extern "C" {

const char* be_status_name(be_status status) {
  switch (status) {
    case BE_OK: return "BE_OK";
    case BE_ERR_DOMAIN: return "BE_ERR_DOMAIN";
    case BE_ERR_INVALID_ARGUMENT: return "BE_ERR_INVALID_ARGUMENT";
    case BE_ERR_PARSE: return "BE_ERR_PARSE";
    case BE_ERR_IO: return "BE_ERR_IO";
    case BE_ERR_NUMERICAL: return "BE_ERR_NUMERICAL";
    case BE_ERR_INTERNAL: return "BE_ERR_INTERNAL";
  }
  return "BE_ERR_UNKNOWN";
}

const char* be_last_error_message(void) { return g_last_error.c_str(); }

const char* be_version(void) { return "1.0.0"; }

// ---------------------------------------------------------------------------
// Gas law and entropy
// ---------------------------------------------------------------------------

be_status be_gas_create(double gamma, be_gas** out) {
  return guarded([&] {
    require(out != nullptr, "be_gas_create: out is null");
    const be::GasLaw law(gamma);
    *out = new be_gas{law, be::EntropyConstants::for_gas(law)};
  });
}

void be_gas_destroy(be_gas* gas) { delete gas; }

be_status be_gas_kappa(const be_gas* gas, double* out) {
  return guarded([&] {
    require(gas != nullptr && out != nullptr, "be_gas_kappa: null argument");
    *out = gas->law.kappa();
  });
}

be_status be_gas_theta(const be_gas* gas, double* out) {
  return guarded([&] {
    require(gas != nullptr && out != nullptr, "be_gas_theta: null argument");
    *out = gas->law.theta();
  });
}

be_status be_entropy_constants(const be_gas* gas, double* c1, double* c2) {
  return guarded([&] {
    require(gas != nullptr && c1 != nullptr && c2 != nullptr,
            "be_entropy_constants: null argument");
    *c1 = gas->consts.c1;
    *c2 = gas->consts.c2;
  });
}

be_status be_tilde_eta(const be_gas* gas, double rho, double m, double* value,
                       double* remainder) {
  return guarded([&] {
    require(gas != nullptr && value != nullptr && remainder != nullptr,
            "be_tilde_eta: null argument");
    const be::TildeEta te = be::tilde_eta(gas->law, gas->consts, rho, m);
    *value = te.value;
    *remainder = te.remainder;
  });
}

// ---------------------------------------------------------------------------
// Profile
// ---------------------------------------------------------------------------

be_status be_profile_create(double gamma, double lambda, double mass, be_profile** out) {
  return guarded([&] {
    require(out != nullptr, "be_profile_create: out is null");
    *out = new be_profile{be::BarenblattProfile::from_mass(be::GasLaw(gamma),
                                                           be::DampingLaw(lambda), mass)};
  });
}

void be_profile_destroy(be_profile* profile) { delete profile; }

be_status be_profile_params(const be_profile* profile, double* amplitude, double* shape,
                            double* exponent) {
  return guarded([&] {
    require(profile != nullptr && amplitude != nullptr && shape != nullptr &&
                exponent != nullptr,
            "be_profile_params: null argument");
    *amplitude = profile->profile.amplitude();
    *shape = profile->profile.shape();
    *exponent = profile->profile.similarity_exponent();
  });
}

be_status be_profile_density(const be_profile* profile, double x, double t, double* out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "be_profile_density: null argument");
    *out = profile->profile.density(x, t);
  });
}

be_status be_profile_momentum(const be_profile* profile, double x, double t, double* out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "be_profile_momentum: null argument");
    *out = profile->profile.momentum(x, t);
  });
}

be_status be_profile_support_radius(const be_profile* profile, double t, double* out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "be_profile_support_radius: null argument");
    *out = profile->profile.support_radius(t);
  });
}

be_status be_profile_lp_norm(const be_profile* profile, double p, double t, double* out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "be_profile_lp_norm: null argument");
    *out = profile->profile.lp_norm(p, t);
  });
}

// ---------------------------------------------------------------------------
// Rates
// ---------------------------------------------------------------------------

be_status be_rates_compute(double gamma, double lambda, be_rates_result** out) {
  return guarded([&] {
    require(out != nullptr, "be_rates_compute: out is null");
    *out = new be_rates_result{be::iterate_rates(gamma, lambda)};
  });
}

void be_rates_result_destroy(be_rates_result* result) { delete result; }

be_status be_rates_values(const be_rates_result* result, double* mu_tilde, double* alpha_tilde,
                          int* branch) {
  return guarded([&] {
    require(result != nullptr && mu_tilde != nullptr && alpha_tilde != nullptr &&
                branch != nullptr,
            "be_rates_values: null argument");
    *mu_tilde = result->result.mu_tilde;
    *alpha_tilde = result->result.alpha_tilde;
    *branch = result->result.branch;
  });
}

be_status be_rates_trace_size(const be_rates_result* result, size_t* out) {
  return guarded([&] {
    require(result != nullptr && out != nullptr, "be_rates_trace_size: null argument");
    *out = result->result.trace.size();
  });
}

be_status be_rates_trace_entry(const be_rates_result* result, size_t index, double* mu,
                               double* theta) {
  return guarded([&] {
    require(result != nullptr && mu != nullptr && theta != nullptr,
            "be_rates_trace_entry: null argument");
    require(index < result->result.trace.size(), "be_rates_trace_entry: index out of range");
    *mu = result->result.trace[index].first;
    *theta = result->result.trace[index].second;
  });
}

// ---------------------------------------------------------------------------
// Damping and orchestration
// ---------------------------------------------------------------------------

be_status be_damping_factor(double lambda, double t0, double dt, double* out) {
  return guarded([&] {
    require(out != nullptr, "be_damping_factor: out is null");
    *out = be::damping_factor(be::DampingLaw(lambda), t0, dt);
  });
}

be_status be_run(const char* config_path, const char* mode, const char* output_dir,
                 char* resolved_dir, size_t resolved_cap) {
  return guarded([&] {
    require(config_path != nullptr, "be_run: config_path is null");
    be::ExperimentConfig config = be::parse_config_file(config_path);
    if (mode != nullptr && mode[0] != '\0') {
      const std::string m = mode;
      if (m != "run" && m != "pme") {
        throw std::invalid_argument("be_run: mode must be \"run\" or \"pme\"");
      }
      config.mode = m;
    }
    const be::RunArtifacts art =
        be::execute(config, output_dir != nullptr ? output_dir : "");
    if (resolved_dir != nullptr && resolved_cap > 0) {
      std::strncpy(resolved_dir, art.directory.c_str(), resolved_cap - 1);
      resolved_dir[resolved_cap - 1] = '\0';
    }
  });
}

be_status be_emit_profile_csv(double gamma, double lambda, double mass, double time,
                              size_t samples, const char* path) {
  return guarded([&] {
    require(path != nullptr, "be_emit_profile_csv: path is null");
    be::emit_barenblatt_csv(gamma, lambda, mass, time, samples, path);
  });
}

be_status be_fit_decay_csv(const char* csv_path, const char* column, double t_start,
                           double t_end, double* slope, double* intercept, double* r_squared) {
  return guarded([&] {
    require(csv_path != nullptr && column != nullptr && slope != nullptr &&
                intercept != nullptr && r_squared != nullptr,
            "be_fit_decay_csv: null argument");
    const be::DecayFit fit = be::fit_decay_csv(csv_path, column, t_start, t_end);
    *slope = fit.slope;
    *intercept = fit.intercept;
    *r_squared = fit.r_squared;
  });
}

// ---------------------------------------------------------------------------
// Acceptance suite
// ---------------------------------------------------------------------------

be_status be_validate(int quick, be_criterion_callback callback, void* user, int* n_passed,
                      int* n_failed) {
  int passed = 0;
  int failed = 0;
  const be_status status = guarded([&] {
    const auto results = be::run_acceptance(
        quick != 0, [&](const be::CriterionResult& r) {
          if (callback != nullptr) {
            callback(r.id, r.name.c_str(), r.pass ? 1 : 0, r.detail.c_str(), r.seconds, user);
          }
        });
    for (const auto& r : results) (r.pass ? passed : failed) += 1;
    if (failed > 0) {
      std::string names;
      for (const auto& r : results) {
        if (r.pass) continue;
        if (!names.empty()) names += ", ";
        names += r.name;
      }
      throw std::runtime_error("acceptance criteria failed: " + names);
    }
  });
  if (n_passed != nullptr) *n_passed = passed;
  if (n_failed != nullptr) *n_failed = failed;
  return status;
}

}  // extern "C"
