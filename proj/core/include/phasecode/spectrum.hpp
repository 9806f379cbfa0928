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

#include <vector>

#include "phasecode/experiment.hpp"

namespace phasecode {

/// Frequency grid, shared by both spins, as offsets (Hz) from each spin's
/// Larmor frequency: offsets -span_hz, -span_hz + step_hz, ..., +span_hz.
struct SpectrumGrid {
  double span_hz = 0.0;
  double step_hz = 0.0;

  /// A grid wide and fine enough for J and the given T2* values.
  static SpectrumGrid for_lines(double j_hz, double t2_star_a, double t2_star_b);
};

/// Sampled complex spectrum of both spins. Each spin carries two Lorentzian
/// lines of half-width 1/(2 pi T2*) at offsets +J/2 (high) and -J/2 (low)
/// whose areas are the peak integrals.
struct Spectrum {
  std::vector<double> offsets_hz;
  std::vector<Complex> a;
  std::vector<Complex> b;
  double j_hz = kDefaultJHz;
};

/// Lorentzian half-width at half maximum, 1/(2 pi T2*), in Hz.
double line_half_width(double t2_star);

/// Throws std::invalid_argument when the grid does not reach 64 half-widths
/// past the outer lines or the step exceeds a quarter of the narrowest
/// half-width.
Spectrum synthesize_spectrum(const Matrix4 &rho0, double t2_star_a, double t2_star_b, const SpectrumGrid &grid,
                             double j_hz = kDefaultJHz);

/// Trapezoidal areas of the four lines: positive offsets give the high line,
/// negative offsets the low line.
PeakIntegrals integrate_lines(const Spectrum &spectrum);

}  // namespace phasecode
