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

#include <cmath>
#include <limits>
#include <random>

#include "phasecode/experiment.hpp"
#include "phasecode/qcore.hpp"

namespace phasecode::testing {

inline Matrix4 random_hermitian(std::mt19937_64 &rng, bool traceless = false) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(n(rng), n(rng));
  Matrix4 h = 0.5 * (m + m.adjoint());
  if (traceless) h -= (h.trace() / 4.0) * Matrix4::Identity();
  return h;
}

inline Matrix2 random_hermitian2(std::mt19937_64 &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix2 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = Complex(n(rng), n(rng));
  return 0.5 * (m + m.adjoint());
}

/// T2* that yields total dephasing probability p after t_d.
inline double t2_for(double p, double t_d) {
  if (p <= 0.0) return std::numeric_limits<double>::infinity();
  return t_d / -std::log1p(-2.0 * p);
}

/// Ideal settings with prescribed total error probabilities at t_d.
inline TrialSettings settings_for(double p_a, double p_b, double t_d) {
  TrialSettings s;
  s.noise.t2_star_a = t2_for(p_a, t_d);
  s.noise.t2_star_b = t2_for(p_b, t_d);
  return s;
}

/// Closed-form coded output state.
inline Matrix4 coded_output(double theta, double pa, double pb) {
  const Matrix2 &I = pauli(0), &X = pauli(1), &Z = pauli(3);
  const double c = std::cos(theta), s = std::sin(theta);
  const Matrix2 acc = c * (1 - pa - pb + 2 * pa * pb) * Z + s * (1 - pa - pb) * X;
  const Matrix2 rej = c * (pa + pb - 2 * pa * pb) * Z + s * (pb - pa) * X;
  return tensor(acc, 0.5 * (I + Z)) + tensor(rej, 0.5 * (I - Z));
}

/// Closed-form control output state.
inline Matrix4 control_output(double theta, double pa) {
  const Matrix2 &I = pauli(0), &X = pauli(1), &Z = pauli(3);
  return tensor(std::cos(theta) * Z + (1 - 2 * pa) * std::sin(theta) * X, 0.5 * (I + Z));
}

}  // namespace phasecode::testing
