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

#include "config.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace be {

// ---------------------------------------------------------------------------
// Low-level lexing
// ---------------------------------------------------------------------------

namespace {

auto trim(const std::string& s) -> std::string {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

auto parse_double(const std::string& key, const std::string& value) -> double {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ParseError("config key '" + key + "': expected a number, got '" + value + "'");
  }
  if (used != value.size()) {
    throw ParseError("config key '" + key + "': trailing characters in '" + value + "'");
  }
  return out;
}

auto parse_size(const std::string& key, const std::string& value) -> std::size_t {
  const double v = parse_double(key, value);
  const auto n = static_cast<long long>(v);
  if (v < 0 || static_cast<double>(n) != v) {
    throw ParseError("config key '" + key + "': expected a non-negative integer, got '" +
                             value + "'");
  }
  return static_cast<std::size_t>(n);
}

auto parse_list(const std::string& key, const std::string& value) -> std::vector<double> {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) {
      throw ParseError("config key '" + key + "': empty list element in '" + value + "'");
    }
    out.push_back(parse_double(key, t));
  }
  if (out.empty()) {
    throw ParseError("config key '" + key + "': expected a comma-separated list");
  }
  return out;
}

auto format_number(double v) -> std::string {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

auto format_list(const std::vector<double>& v) -> std::string {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(v[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  std::set<std::string> seen;
  std::set<std::string> required_missing{"gamma", "lambda", "t_end"};

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) +
                               ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ParseError("config line " + std::to_string(line_no) + ": empty key");
    }
    if (!seen.insert(key).second) {
      throw ParseError("config key '" + key + "' appears more than once");
    }
    required_missing.erase(key);

    if (key == "mode") {
      c.mode = value;
    } else if (key == "gamma") {
      c.gamma = parse_double(key, value);
    } else if (key == "lambda") {
      c.lambda = parse_double(key, value);
    } else if (key == "mass") {
      c.mass = parse_double(key, value);
    } else if (key == "cells") {
      c.cells = parse_size(key, value);
    } else if (key == "domain_half_width_factor") {
      c.domain_half_width_factor = parse_double(key, value);
    } else if (key == "domain_half_width") {
      c.domain_half_width = parse_double(key, value);
    } else if (key == "cfl") {
      c.cfl = parse_double(key, value);
    } else if (key == "t_end") {
      c.t_end = parse_double(key, value);
    } else if (key == "snapshot_ratio") {
      c.snapshot_ratio = parse_double(key, value);
    } else if (key == "dry_threshold") {
      c.dry_threshold = parse_double(key, value);
    } else if (key == "max_dt") {
      c.max_dt = parse_double(key, value);
    } else if (key == "seed") {
      c.seed = static_cast<unsigned long>(parse_size(key, value));
    } else if (key == "output_dir") {
      c.output_dir = value;
    } else if (key == "initial_data.kind") {
      c.initial_kind = value;
    } else if (key == "initial_data.t0") {
      c.initial_t0 = parse_double(key, value);
    } else if (key == "initial_data.amplitude") {
      c.initial_amplitude = parse_double(key, value);
    } else if (key == "initial_data.wavelength") {
      c.initial_wavelength = parse_double(key, value);
    } else if (key == "initial_data.centers") {
      c.initial_centers = parse_list(key, value);
    } else if (key == "initial_data.widths") {
      c.initial_widths = parse_list(key, value);
    } else if (key == "initial_data.heights") {
      c.initial_heights = parse_list(key, value);
    } else if (key == "initial_data.rho_left") {
      c.initial_rho_left = parse_double(key, value);
    } else if (key == "initial_data.u_left") {
      c.initial_u_left = parse_double(key, value);
    } else if (key == "initial_data.rho_right") {
      c.initial_rho_right = parse_double(key, value);
    } else if (key == "initial_data.u_right") {
      c.initial_u_right = parse_double(key, value);
    } else if (key == "initial_data.table") {
      c.initial_table = value;
    } else if (key == "sweep.gamma") {
      c.sweep_gamma = parse_list(key, value);
    } else if (key == "sweep.lambda") {
      c.sweep_lambda = parse_list(key, value);
    } else {
      throw ParseError("unknown config key '" + key + "'");
    }
  }

  if (!required_missing.empty()) {
    std::string names;
    for (const auto& k : required_missing) {
      if (!names.empty()) names += ", ";
      names += k;
    }
    throw ParseError("config is missing required key(s): " + names);
  }

  // -------------------------------------------------------------------------
  // Validation
  // -------------------------------------------------------------------------

  auto check_range = [](bool ok, const std::string& msg) {
    if (!ok) throw ParseError(msg);
  };
  check_range(c.mode == "run" || c.mode == "pme",
              "config key 'mode': must be 'run' or 'pme', got '" + c.mode + "'");
  check_range(c.gamma > 1.0 && c.gamma < 3.0,
              "config key 'gamma': must lie in (1, 3), got " + format_number(c.gamma));
  if (!(c.lambda > 0.0 && c.lambda < 1.0)) {
    throw ParseError(
        "config key 'lambda': must lie in (0, 1), got " + format_number(c.lambda) +
        "; at lambda = 1 the damping integral diverges only logarithmically and the "
        "self-similar scaling changes regime, so that endpoint is not supported");
  }
  for (double g : c.sweep_gamma) {
    check_range(g > 1.0 && g < 3.0,
                "config key 'sweep.gamma': entries must lie in (1, 3), got " + format_number(g));
  }
  for (double l : c.sweep_lambda) {
    if (!(l > 0.0 && l < 1.0)) {
      throw ParseError("config key 'sweep.lambda': entries must lie in (0, 1), got " +
                               format_number(l) +
                               "; lambda = 1 changes the self-similar scaling regime");
    }
  }
  check_range(c.cells >= 2, "config key 'cells': need at least 2 cells");
  check_range(c.cfl > 0.0 && c.cfl < 1.0, "config key 'cfl': must lie in (0, 1)");
  check_range(c.t_end > c.initial_t0,
              "config key 't_end': must exceed initial_data.t0 = " + format_number(c.initial_t0));
  check_range(c.initial_t0 >= 0.0, "config key 'initial_data.t0': must be >= 0");
  check_range(c.snapshot_ratio > 1.0, "config key 'snapshot_ratio': must be > 1");
  check_range(c.dry_threshold >= 0.0, "config key 'dry_threshold': must be >= 0");
  check_range(c.max_dt >= 0.0, "config key 'max_dt': must be >= 0 (0 disables the cap)");
  check_range(c.domain_half_width >= 0.0,
              "config key 'domain_half_width': must be >= 0 (0 means auto)");
  check_range(c.domain_half_width_factor >= 1.0,
              "config key 'domain_half_width_factor': must be >= 1");

  const std::set<std::string> kinds{"barenblatt", "perturbed_barenblatt", "two_bumps", "riemann",
                                    "table"};
  if (kinds.find(c.initial_kind) == kinds.end()) {
    throw ParseError(
        "config key 'initial_data.kind': must be one of barenblatt, perturbed_barenblatt, "
        "two_bumps, riemann, table; got '" +
        c.initial_kind + "'");
  }
  const bool profile_based =
      c.initial_kind == "barenblatt" || c.initial_kind == "perturbed_barenblatt";
  if (profile_based) {
    check_range(c.mass > 0.0, "config key 'mass': must be > 0 for initial_data.kind = '" +
                                  c.initial_kind + "'");
  }
  if (c.initial_kind == "perturbed_barenblatt") {
    check_range(c.initial_amplitude > -1.0 && c.initial_amplitude < 1.0,
                "config key 'initial_data.amplitude': must lie in (-1, 1)");
    check_range(c.initial_wavelength >= 0.0,
                "config key 'initial_data.wavelength': must be >= 0 (0 means support radius)");
  }
  if (c.initial_kind == "two_bumps") {
    const std::size_t n = c.initial_centers.size();
    check_range(n >= 1 && c.initial_widths.size() == n && c.initial_heights.size() == n,
                "config keys 'initial_data.centers/widths/heights': lists must share a length");
    for (double w : c.initial_widths) {
      check_range(w > 0.0, "config key 'initial_data.widths': entries must be > 0");
    }
    for (double h : c.initial_heights) {
      check_range(h > 0.0, "config key 'initial_data.heights': entries must be > 0");
    }
  }
  if (c.initial_kind == "riemann") {
    check_range(c.initial_rho_left >= 0.0 && c.initial_rho_right >= 0.0,
                "config keys 'initial_data.rho_left/rho_right': must be >= 0");
    check_range(c.domain_half_width > 0.0,
                "config key 'domain_half_width': required for initial_data.kind = 'riemann'");
  }
  if (c.initial_kind == "table") {
    check_range(!c.initial_table.empty(),
                "config key 'initial_data.table': required for initial_data.kind = 'table'");
    check_range(c.domain_half_width > 0.0,
                "config key 'domain_half_width': required for initial_data.kind = 'table'");
  }
  if (c.mode == "pme") {
    check_range(profile_based || c.initial_kind == "two_bumps",
                "mode 'pme' supports initial_data.kind barenblatt, perturbed_barenblatt, or "
                "two_bumps");
  }
  return c;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

// ---------------------------------------------------------------------------
// Canonical emission
// ---------------------------------------------------------------------------

std::string format_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "mode = " << c.mode << '\n';
  out << "gamma = " << format_number(c.gamma) << '\n';
  out << "lambda = " << format_number(c.lambda) << '\n';
  out << "mass = " << format_number(c.mass) << '\n';
  out << "cells = " << c.cells << '\n';
  out << "domain_half_width_factor = " << format_number(c.domain_half_width_factor) << '\n';
  out << "domain_half_width = " << format_number(c.domain_half_width) << '\n';
  out << "cfl = " << format_number(c.cfl) << '\n';
  out << "t_end = " << format_number(c.t_end) << '\n';
  out << "snapshot_ratio = " << format_number(c.snapshot_ratio) << '\n';
  out << "dry_threshold = " << format_number(c.dry_threshold) << '\n';
  out << "max_dt = " << format_number(c.max_dt) << '\n';
  out << "seed = " << c.seed << '\n';
  out << "output_dir = " << c.output_dir << '\n';
  out << "initial_data.kind = " << c.initial_kind << '\n';
  out << "initial_data.t0 = " << format_number(c.initial_t0) << '\n';
  out << "initial_data.amplitude = " << format_number(c.initial_amplitude) << '\n';
  out << "initial_data.wavelength = " << format_number(c.initial_wavelength) << '\n';
  out << "initial_data.centers = " << format_list(c.initial_centers) << '\n';
  out << "initial_data.widths = " << format_list(c.initial_widths) << '\n';
  out << "initial_data.heights = " << format_list(c.initial_heights) << '\n';
  out << "initial_data.rho_left = " << format_number(c.initial_rho_left) << '\n';
  out << "initial_data.u_left = " << format_number(c.initial_u_left) << '\n';
  out << "initial_data.rho_right = " << format_number(c.initial_rho_right) << '\n';
  out << "initial_data.u_right = " << format_number(c.initial_u_right) << '\n';
  if (!c.initial_table.empty()) out << "initial_data.table = " << c.initial_table << '\n';
  if (!c.sweep_gamma.empty()) out << "sweep.gamma = " << format_list(c.sweep_gamma) << '\n';
  if (!c.sweep_lambda.empty()) out << "sweep.lambda = " << format_list(c.sweep_lambda) << '\n';
  return out.str();
}

}  // namespace be
