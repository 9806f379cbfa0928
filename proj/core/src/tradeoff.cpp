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

#include "phasecode/tradeoff.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace phasecode {

std::string_view to_string(TradeoffModel m) {
  switch (m) {
    case TradeoffModel::Pool: return "pool";
    case TradeoffModel::GateCost: return "gate_cost";
    case TradeoffModel::Signal2m: return "signal_2m";
  }
  return "?";
}

TradeoffModel parse_tradeoff_model(std::string_view text) {
  if (text == "pool") return TradeoffModel::Pool;
  if (text == "gate_cost") return TradeoffModel::GateCost;
  if (text == "signal_2m") return TradeoffModel::Signal2m;
  throw std::invalid_argument("unknown tradeoff model: " + std::string(text));
}

double crossover_probability(TradeoffModel model, double p_g) {
  switch (model) {
    case TradeoffModel::Pool: return 1.0 / 6.0;
    case TradeoffModel::GateCost:
      if (!(p_g >= 0.0 && p_g <= 0.5)) throw std::invalid_argument("p_g must lie in [0, 1/2]");
      return p_g / (1.0 - p_g);
    case TradeoffModel::Signal2m: return 0.25;
  }
  throw std::invalid_argument("unknown tradeoff model");
}

TradeoffReport tradeoff(double p, double p_g, TradeoffModel model) {
  if (!(p >= 0.0 && p <= 0.5) || !(p_g >= 0.0 && p_g <= 0.5)) {
    throw std::invalid_argument("tradeoff: probabilities must lie in [0, 1/2]");
  }
  TradeoffReport r;
  r.model = model;
  r.p = p;
  r.p_g = p_g;
  switch (model) {
    case TradeoffModel::Pool:
      r.detection_signal = (1.0 - 2.0 * p) / 2.0;
      r.correction_signal = 1.0 / 3.0;
      break;
    case TradeoffModel::GateCost:
      r.detection_signal = (1.0 - 2.0 * p) * (1.0 - p_g);
      r.correction_signal = 1.0 - 3.0 * p_g;
      break;
    case TradeoffModel::Signal2m:
      r.detection_signal = (1.0 - 2.0 * p) / 4.0;
      r.correction_signal = 1.0 / 8.0;
      break;
  }
  r.detection_fidelity = 1.0 - p * p;
  r.correction_fidelity = 1.0 - 3.0 * p * p;
  r.crossover_p = crossover_probability(model, p_g);
  return r;
}

double detection_signal_scale(int t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  return std::ldexp(1.0, -2 * t);
}

double correction_signal_scale(int t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  return std::ldexp(1.0, -4 * t);
}

}  // namespace phasecode
