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

#include "phasecode/sequence_io.hpp"

#include <stdexcept>

namespace phasecode {

void to_json(nlohmann::json &j, const PulseElement &e) {
  if (e.kind == PulseElement::Kind::JDelay) {
    j = nlohmann::json{{"kind", "j_delay"}, {"duration", e.duration}};
  } else {
    j = nlohmann::json{{"kind", "rotation"},
                       {"spin", std::string(to_string(e.spin))},
                       {"axis", std::string(to_string(e.axis))},
                       {"angle", e.angle}};
  }
}

void from_json(const nlohmann::json &j, PulseElement &e) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "j_delay") {
    e = PulseElement::delay(j.at("duration").get<double>());
  } else if (kind == "rotation") {
    e = PulseElement::rotation(parse_spin(j.at("spin").get<std::string>()),
                               parse_axis(j.at("axis").get<std::string>()), j.at("angle").get<double>());
  } else {
    throw std::invalid_argument("unknown pulse element kind: " + kind);
  }
}

void to_json(nlohmann::json &j, const PulseSequence &s) {
  j = nlohmann::json{{"name", s.name}, {"elements", s.elements}};
}

void from_json(const nlohmann::json &j, PulseSequence &s) {
  s.name = j.value("name", std::string{});
  s.elements = j.at("elements").get<std::vector<PulseElement>>();
}

}  // namespace phasecode
