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

#include <nlohmann/json.hpp>

#include "phasecode/gates.hpp"

namespace phasecode {

// Wire form of a pulse program:
//   {"name": "...", "elements": [
//      {"kind": "rotation", "spin": "A", "axis": "-y", "angle": 1.5707963267948966},
//      {"kind": "j_delay", "duration": 0.0025641025641025641}]}
// Angles are radians, durations seconds.

void to_json(nlohmann::json &j, const PulseElement &e);
void from_json(const nlohmann::json &j, PulseElement &e);
void to_json(nlohmann::json &j, const PulseSequence &s);
void from_json(const nlohmann::json &j, PulseSequence &s);

}  // namespace phasecode
