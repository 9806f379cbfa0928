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

#include <array>
#include <vector>

#include "phasecode/gates.hpp"
#include "phasecode/qcore.hpp"

namespace phasecode {

/// Real and imaginary parts of the four peak integrals of one acquisition:
/// (a_high, a_low, b_high, b_low), real part first.
using Readings = std::array<double, 8>;

/// The nine readout settings {I, X_a, Y_a} x {I, X_b, Y_b}, spin A pulse first.
const std::vector<PulseSequence> &tomography_readouts();

/// Readings of every setting, in tomography_readouts() order.
std::vector<Readings> simulate_readings(const Matrix4 &rho, RfScales scales = {});

/// Least-squares inversion of the 72 readings into the 15 traceless Pauli
/// coefficients. c_00 is not observable and is returned as 0. Throws
/// NumericError if the system is rank deficient and std::invalid_argument on
/// a wrong number of settings.
PauliCoeffs reconstruct_from_readings(const std::vector<Readings> &readings);

/// simulate_readings followed by reconstruct_from_readings.
PauliCoeffs tomography(const Matrix4 &rho);

}  // namespace phasecode
