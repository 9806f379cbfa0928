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

#include <string_view>

namespace phasecode {

/// Figures of merit comparing the two-bit detection code with the three-bit
/// correction code.
///   Pool:     m qubits shared out; signals (1-2p)/2 and 1/3 per qubit.
///   GateCost: n molecules, gate failure p_g; signals (1-2p)(1-p_g) and 1-3p_g.
///   Signal2m: signal falls as 2^-m; signals (1-2p)/4 and 1/8.
/// Fidelities are 1-p^2 (detection, accepted) and 1-3p^2 (correction).
enum class TradeoffModel { Pool, GateCost, Signal2m };

std::string_view to_string(TradeoffModel m);
TradeoffModel parse_tradeoff_model(std::string_view text);

struct TradeoffReport {
  TradeoffModel model = TradeoffModel::Pool;
  double p = 0.0;
  double p_g = 0.0;
  double detection_signal = 0.0;
  double correction_signal = 0.0;
  double detection_fidelity = 1.0;
  double correction_fidelity = 1.0;
  /// Largest p for which the detection code is at least as good.
  double crossover_p = 0.0;
};

/// Throws std::invalid_argument unless p, p_g lie in [0, 1/2].
TradeoffReport tradeoff(double p, double p_g, TradeoffModel model);

/// Crossover probability of a model: 1/6, p_g/(1-p_g) or 1/4.
double crossover_probability(TradeoffModel model, double p_g = 0.0);

/// Leading signal scaling of t-error detection and correction codes that meet
/// the singleton bound when signal falls as 2^-m: 2^-2t and 2^-4t.
double detection_signal_scale(int t);
double correction_signal_scale(int t);

}  // namespace phasecode
