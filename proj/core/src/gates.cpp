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

#include "phasecode/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace phasecode {

namespace {

// Signed Pauli index for an axis: returns (index, sign).
std::pair<int, double> axis_pauli(Axis axis) {
  switch (axis) {
    case Axis::X: return {1, 1.0};
    case Axis::Y: return {2, 1.0};
    case Axis::Z: return {3, 1.0};
    case Axis::MinusX: return {1, -1.0};
    case Axis::MinusY: return {2, -1.0};
    case Axis::MinusZ: return {3, -1.0};
  }
  throw std::invalid_argument("unknown axis");
}

bool is_z(Axis axis) { return axis == Axis::Z || axis == Axis::MinusZ; }

PulseElement rot(Spin s, Axis a, double angle) { return PulseElement::rotation(s, a, angle); }

}  // namespace

PulseElement PulseElement::rotation(Spin spin, Axis axis, double angle) {
  PulseElement e;
  e.kind = Kind::Rotation;
  e.spin = spin;
  e.axis = axis;
  e.angle = angle;
  return e;
}

PulseElement PulseElement::delay(double seconds) {
  if (!(seconds >= 0.0)) {
    throw std::invalid_argument("delay duration must be >= 0");
  }
  PulseElement e;
  e.kind = Kind::JDelay;
  e.duration = seconds;
  return e;
}

PulseSequence &PulseSequence::then(const PulseElement &e) {
  elements.push_back(e);
  return *this;
}

PulseSequence &PulseSequence::then(const PulseSequence &other) {
  elements.insert(elements.end(), other.elements.begin(), other.elements.end());
  return *this;
}

PulseSequence operator+(PulseSequence a, const PulseSequence &b) {
  a.then(b);
  if (!b.name.empty()) {
    a.name = a.name.empty() ? b.name : a.name + "+" + b.name;
  }
  return a;
}

Matrix4 rotation_unitary(Spin spin, Axis axis, double angle, double scale) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("rotation angle must be finite");
  }
  if (!(scale > 0.0)) {
    throw std::invalid_argument("RF scale must be > 0");
  }
  const auto [index, sign] = axis_pauli(axis);
  const double effective = is_z(axis) ? angle : angle * scale;
  const double half = sign * effective / 2.0;
  const Matrix2 r = std::cos(half) * Matrix2::Identity() - Complex{0.0, std::sin(half)} * pauli(index);
  return spin == Spin::A ? tensor(r, Matrix2::Identity()) : tensor(Matrix2::Identity(), r);
}

Matrix4 j_coupling_unitary(double t, double j_hz) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("J evolution time must be >= 0");
  }
  const double phase = kPi * j_hz * t / 2.0;
  const Complex even = std::polar(1.0, -phase);
  const Complex odd = std::polar(1.0, phase);
  Matrix4 u = Matrix4::Zero();
  u(0, 0) = even;
  u(1, 1) = odd;
  u(2, 2) = odd;
  u(3, 3) = even;
  return u;
}

Matrix4 element_unitary(const PulseElement &e, double j_hz, RfScales scales) {
  if (e.kind == PulseElement::Kind::JDelay) {
    return j_coupling_unitary(e.duration, j_hz);
  }
  return rotation_unitary(e.spin, e.axis, e.angle, scales.of(e.spin));
}

Matrix4 compile(const PulseSequence &seq, double j_hz, RfScales scales) {
  Matrix4 u = Matrix4::Identity();
  for (const PulseElement &e : seq.elements) {
    u = element_unitary(e, j_hz, scales) * u;
  }
  return u;
}

const std::vector<std::string> &gate_names() {
  static const std::vector<std::string> names = {
      "X_a", "Y_a", "X_b", "Y_b", "CN_tilde", "U_enc", "U_dec", "chi", "hadamard_b", "refocus_b", "refocus_b_bar"};
  return names;
}

PulseSequence gate_library(std::string_view name, const GateOptions &options) {
  const double h = kPi / 2;
  const PulseElement tau = PulseElement::delay(tau_delay(options.j_hz));
  PulseSequence s;
  s.name = std::string(name);
  if (name == "X_a") {
    s.then(rot(Spin::A, Axis::X, h));
  } else if (name == "Y_a") {
    s.then(rot(Spin::A, Axis::Y, options.theta));
  } else if (name == "X_b") {
    s.then(rot(Spin::B, Axis::X, h));
  } else if (name == "Y_b") {
    s.then(rot(Spin::B, Axis::Y, h));
  } else if (name == "CN_tilde") {
    s.then(rot(Spin::A, Axis::Y, h)).then(tau).then(rot(Spin::A, Axis::X, h));
  } else if (name == "U_enc") {
    s.then(rot(Spin::A, Axis::Y, h))
        .then(rot(Spin::B, Axis::Y, h))
        .then(tau)
        .then(rot(Spin::A, Axis::Y, h))
        .then(rot(Spin::A, Axis::X, h))
        .then(rot(Spin::A, Axis::Z, kPi))
        .then(rot(Spin::B, Axis::Z, kPi));
  } else if (name == "U_dec") {
    s.then(rot(Spin::A, Axis::Y, h))
        .then(tau)
        .then(rot(Spin::B, Axis::X, h))
        .then(rot(Spin::B, Axis::MinusY, h))
        .then(rot(Spin::A, Axis::X, h))
        .then(rot(Spin::A, Axis::Z, 3 * h))
        .then(rot(Spin::B, Axis::Z, 3 * h));
  } else if (name == "chi") {
    s.then(tau).then(rot(Spin::A, Axis::MinusZ, h)).then(rot(Spin::B, Axis::MinusZ, h));
  } else if (name == "hadamard_b") {
    s.then(rot(Spin::B, Axis::X, -kPi)).then(rot(Spin::B, Axis::Y, 3 * kPi / 2));
  } else if (name == "refocus_b") {
    s.then(rot(Spin::B, Axis::Y, kPi));
  } else if (name == "refocus_b_bar") {
    s.then(rot(Spin::B, Axis::MinusY, kPi));
  } else {
    throw std::invalid_argument("unknown gate name: " + std::string(name));
  }
  return s;
}

int rf_pulse_count(const PulseSequence &seq) {
  int n = 0;
  for (const PulseElement &e : seq.elements) {
    if (e.kind == PulseElement::Kind::Rotation && !is_z(e.axis)) {
      ++n;
    }
  }
  return n;
}

std::string_view to_string(Spin s) { return s == Spin::A ? "A" : "B"; }

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
    case Axis::MinusX: return "-x";
    case Axis::MinusY: return "-y";
    case Axis::MinusZ: return "-z";
  }
  return "?";
}

Spin parse_spin(std::string_view text) {
  if (text == "A" || text == "a") return Spin::A;
  if (text == "B" || text == "b") return Spin::B;
  throw std::invalid_argument("unknown spin: " + std::string(text));
}

Axis parse_axis(std::string_view text) {
  if (text == "x") return Axis::X;
  if (text == "y") return Axis::Y;
  if (text == "z") return Axis::Z;
  if (text == "-x") return Axis::MinusX;
  if (text == "-y") return Axis::MinusY;
  if (text == "-z") return Axis::MinusZ;
  throw std::invalid_argument("unknown axis: " + std::string(text));
}

}  // namespace phasecode
