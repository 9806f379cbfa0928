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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phasecode_cli/config.hpp"
#include "phasecode_cli/runner.hpp"

namespace phasecode::cli {

/// Exit statuses of the phasecode executable.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumeric = 3 };

/// Version string written into run manifests.
std::string tool_version();

struct RunOptions {
  std::string out_dir = ".";
  int parallelism = 1;
  /// Seed of the Monte-Carlo cross-check; only read when the config asks for samples.
  std::uint64_t seed = 1;
};

/// Files written by cmd_run, relative to out_dir.
struct RunOutputs {
  std::vector<std::string> paths;
  SweepResult result;
};

/// Runs the sweep and writes trials.csv, fits.csv, trends.csv,
/// resolved_config.json and manifest.json (plus mc_check.csv when requested).
/// Throws ConfigError or NumericError.
RunOutputs cmd_run(const RunConfig &config, const RunOptions &options);

/// Figure names accepted by cmd_plot.
const std::vector<std::string> &figure_names();

/// Reads trials.csv / fits.csv from results_dir and writes <figure>.svg into
/// out_dir. Returns the written path. Throws ConfigError for an unknown
/// figure or missing/empty results.
std::string cmd_plot(const std::string &results_dir, const std::string &figure, const std::string &out_dir);

/// SVG text of a figure built from parsed results. Throws ConfigError.
std::string render_figure(const std::string &figure, const std::vector<TrialRow> &trials,
                          const std::vector<FitRow> &fits);

/// Pipeline stage selector: "rho0", "rho1", "rho3", "rho4" or "rho5".
int parse_stage(const std::string &stage);

/// Simulates the requested stage at the config's tomography point, runs the
/// 9-readout reconstruction and writes tomography_<stage>.csv (coefficients)
/// and tomography_<stage>_matrix.csv (amplitude and phase per entry).
std::vector<std::string> cmd_tomography(const RunConfig &config, const std::string &stage,
                                        const std::string &out_dir);

/// Coefficient table: i,j,reconstructed,direct.
std::string tomography_csv(const PauliCoeffs &reconstructed, const PauliCoeffs &direct);
/// Matrix table: row,col,amplitude,phase of the reconstructed deviation matrix.
std::string density_matrix_csv(const PauliCoeffs &c);

/// Tabulates the three tradeoff models over the config's p range. Writes
/// tradeoff.csv, tradeoff_crossovers.csv and tradeoff.svg.
std::vector<std::string> cmd_tradeoff(const TradeoffSettings &settings, const std::string &out_dir);

/// p grid of a tradeoff range; empty when p_steps is 0 or p_min > p_max.
std::vector<double> tradeoff_grid(const TradeoffSettings &settings);
std::string tradeoff_csv(const TradeoffSettings &settings);
std::string crossovers_csv(const TradeoffSettings &settings);

}  // namespace phasecode::cli
