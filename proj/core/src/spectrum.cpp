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

#include "phasecode/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phasecode {

namespace {

constexpr double kSpanHalfWidths = 64.0;
constexpr double kStepFraction = 0.25;

double lorentzian(double f, double center, double w) {
  const double d = f - center;
  return w / (kPi * (d * d + w * w));
}

}  // namespace

double line_half_width(double t2_star) {
  if (!(t2_star > 0.0)) {
    throw std::invalid_argument("T2* must be > 0");
  }
  return 1.0 / (2.0 * kPi * t2_star);
}

SpectrumGrid SpectrumGrid::for_lines(double j_hz, double t2_star_a, double t2_star_b) {
  const double wa = line_half_width(t2_star_a);
  const double wb = line_half_width(t2_star_b);
  SpectrumGrid g;
  g.span_hz = std::abs(j_hz) / 2.0 + 2.0 * kSpanHalfWidths * std::max(wa, wb);
  g.step_hz = 0.5 * kStepFraction * std::min(wa, wb);
  return g;
}

Spectrum synthesize_spectrum(const Matrix4 &rho0, double t2_star_a, double t2_star_b, const SpectrumGrid &grid,
                             double j_hz) {
  const double wa = line_half_width(t2_star_a);
  const double wb = line_half_width(t2_star_b);
  const double outer = std::abs(j_hz) / 2.0;
  if (!(grid.step_hz > 0.0) || grid.step_hz > kStepFraction * std::min(wa, wb)) {
    throw std::invalid_argument("spectrum grid step too coarse for the line width");
  }
  if (grid.span_hz < outer + kSpanHalfWidths * std::max(wa, wb)) {
    throw std::invalid_argument("spectrum grid span does not cover the lines");
  }
  if (outer < kSpanHalfWidths * std::max(wa, wb) / 2.0) {
    throw std::invalid_argument("lines overlap: J too small for the line width");
  }

  const PeakIntegrals p = peak_integrals(rho0);
  Spectrum s;
  s.j_hz = j_hz;
  const auto n = static_cast<long>(std::floor(grid.span_hz / grid.step_hz));
  for (long k = -n; k <= n; ++k) {
    const double f = static_cast<double>(k) * grid.step_hz;
    s.offsets_hz.push_back(f);
    s.a.push_back(p.a_high * lorentzian(f, outer, wa) + p.a_low * lorentzian(f, -outer, wa));
    s.b.push_back(p.b_high * lorentzian(f, outer, wb) + p.b_low * lorentzian(f, -outer, wb));
  }
  return s;
}

PeakIntegrals integrate_lines(const Spectrum &spectrum) {
  const std::vector<double> &f = spectrum.offsets_hz;
  if (f.size() < 2) {
    throw std::invalid_argument("spectrum has fewer than two samples");
  }
  PeakIntegrals out{};
  for (size_t k = 0; k + 1 < f.size(); ++k) {
    const double h = f[k + 1] - f[k];
    const Complex ta = 0.5 * h * (spectrum.a[k] + spectrum.a[k + 1]);
    const Complex tb = 0.5 * h * (spectrum.b[k] + spectrum.b[k + 1]);
    const double mid = 0.5 * (f[k] + f[k + 1]);
    if (mid > 0.0) {
      out.a_high += ta;
      out.b_high += tb;
    } else {
      out.a_low += ta;
      out.b_low += tb;
    }
  }
  return out;
}

}  // namespace phasecode
