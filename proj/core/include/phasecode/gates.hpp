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

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "phasecode/qcore.hpp"

namespace phasecode {

inline constexpr double kPi = std::numbers::pi;
/// Scalar J coupling of the formate sample, in Hz.
inline constexpr double kDefaultJHz = 195.0;

enum class Spin { A, B };
enum class Axis { X, Y, Z, MinusX, MinusY, MinusZ };

/// Per-spin multiplicative factor on nominal RF rotation angles (1 = ideal pulse).
struct RfScales {
  double a = 1.0;
  double b = 1.0;

  double of(Spin s) const { return s == Spin::A ? a : b; }
};

/// One element of a pulse program: an RF (or frame-shift) rotation or a free
/// J-coupling delay.
struct PulseElement {
  enum class Kind { Rotation, JDelay };

  Kind kind = Kind::Rotation;
  Spin spin = Spin::A;
  Axis axis = Axis::X;
  double angle = 0.0;     // radians, rotations only
  double duration = 0.0;  // seconds, delays only

  static PulseElement rotation(Spin spin, Axis axis, double angle);
  static PulseElement delay(double seconds);

  bool operator==(const PulseElement &) const = default;
};

/// Ordered pulse program; elements()[0] acts first.
struct PulseSequence {
  std::string name;
  std::vector<PulseElement> elements;

  PulseSequence &then(const PulseElement &e);
  PulseSequence &then(const PulseSequence &other);
  bool empty() const { return elements.empty(); }

  bool operator==(const PulseSequence &) const = default;
};

/// Concatenation: a runs first, then b.
PulseSequence operator+(PulseSequence a, const PulseSequence &b);

/// exp(-i (scale*angle/2) sigma_axis) on `spin`, identity on the other spin.
/// z rotations are frame shifts and ignore `scale`. Throws if scale <= 0 or
/// angle is not finite.
Matrix4 rotation_unitary(Spin spin, Axis axis, double angle, double scale = 1.0);

/// exp(-i (pi J t / 2) sigma_z (x) sigma_z). Throws if t < 0.
Matrix4 j_coupling_unitary(double t, double j_hz);

Matrix4 element_unitary(const PulseElement &e, double j_hz, RfScales scales = {});

/// Product U_n ... U_1 of the element unitaries (first element acts first).
Matrix4 compile(const PulseSequence &seq, double j_hz, RfScales scales = {});

/// Options for the named gate library.
struct GateOptions {
  double j_hz = kDefaultJHz;
  double theta = kPi / 2;  // angle of Y_a(theta)
};

/// Named sequences: X_a, Y_a (uses options.theta), X_b, Y_b, CN_tilde, U_enc,
/// U_dec, chi, hadamard_b, refocus_b, refocus_b_bar. Throws
/// std::invalid_argument for unknown names.
PulseSequence gate_library(std::string_view name, const GateOptions &options = {});

/// Names accepted by gate_library().
const std::vector<std::string> &gate_names();

/// 1/(2J): the delay realising exp(-i pi/4 sigma_z (x) sigma_z).
inline double tau_delay(double j_hz) { return 1.0 / (2.0 * j_hz); }

/// Number of non-frame-shift rotation elements (RF pulses) in a sequence.
int rf_pulse_count(const PulseSequence &seq);

std::string_view to_string(Spin s);
std::string_view to_string(Axis a);
Spin parse_spin(std::string_view text);
Axis parse_axis(std::string_view text);

}  // namespace phasecode
