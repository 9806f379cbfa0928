// Copyright 2026 The phasecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phasecode/analysis.hpp"
#include "phasecode/experiment.hpp"

namespace phasecode::cli {

/// Malformed or inconsistent configuration. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TomographySettings {
  double theta = kPi / 2;
  double t_d = 24.0 / kDefaultJHz;
};

struct TradeoffSettings {
  double p_min = 0.0;
  double p_max = 0.5;
  int p_steps = 51;
  double p_g = 0.05;
  /// Largest error probability reached by the experiment; drawn as a marker.
  double p_marker = 0.27;
};

/// Fully resolved run configuration. Every field has a default; a config file
/// only lists what it changes.
struct RunConfig {
  std::string name = "formate";
  TrialSettings settings;
  std::vector<double> thetas = default_theta_grid();
  std::vector<double> storage_times = default_storage_times();
  std::vector<Mode> modes = {Mode::Coded, Mode::Control};
  FitOptions fit;
  /// "uniform" or "inverse_variance" weights for the trend fits.
  std::string trend_weights = "uniform";
  /// Monte-Carlo samples for the optional quadrature cross-check (0 = off).
  int monte_carlo_samples = 0;
  TomographySettings tomography;
  TradeoffSettings tradeoff;
};

/// Parses and validates a config tree. Throws ConfigError.
RunConfig parse_config(const nlohmann::json &tree);

/// Reads a JSON file and parses it. Throws ConfigError.
RunConfig load_config(const std::string &path);

/// Canonical resolved form; parse_config(to_json(c)) reproduces c.
nlohmann::json to_json(const RunConfig &config);

/// Hex SHA-256 of the canonical resolved config.
std::string config_digest(const RunConfig &config);

/// Hex SHA-256 of arbitrary bytes.
std::string sha256_hex(const std::string &bytes);

}  // namespace phasecode::cli
