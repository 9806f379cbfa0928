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

#include <string>
#include <vector>

#include "phasecode/analysis.hpp"
#include "phasecode/experiment.hpp"
#include "phasecode_cli/config.hpp"

namespace phasecode::cli {

/// "ideal": dephasing only, perfect pulses. "simulated": every noise process
/// the config enables. The simulated variant is skipped when it would equal
/// the ideal one.
struct Variant {
  std::string name;
  TrialSettings settings;
};

std::vector<Variant> variants_of(const RunConfig &config);

struct TrialRow {
  std::string variant;
  TrialRecord record;
  double p_a = 0.0;
  double p_b = 0.0;
};

struct FitRow {
  std::string variant;
  Mode mode = Mode::Coded;
  double t_d = 0.0;
  FidelityReport report;
};

struct TrendRow {
  std::string variant;
  std::string series;  // "coded", "control" or "p_coded_vs_p_control"
  std::string quantity;
  QuadraticFit fit;
};

struct SweepResult {
  std::vector<TrialRow> trials;
  std::vector<FitRow> fits;
  std::vector<TrendRow> trends;
};

/// Runs every (variant, mode, t_d, theta) trial, fits one ellipse per
/// (variant, mode, t_d) and the quadratic trends. Rows are ordered by
/// variant, mode, t_d, theta regardless of `parallelism`. Throws NumericError
/// with the failing trial named in the message.
SweepResult run_sweep(const RunConfig &config, int parallelism = 1);

/// "%.17g".
std::string format_double(double v);

std::string trials_csv(const SweepResult &r);
std::string fits_csv(const SweepResult &r);
std::string trends_csv(const SweepResult &r);

/// Reads back trials.csv / fits.csv written by the functions above.
std::vector<TrialRow> parse_trials_csv(const std::string &text);
std::vector<FitRow> parse_fits_csv(const std::string &text);

}  // namespace phasecode::cli
