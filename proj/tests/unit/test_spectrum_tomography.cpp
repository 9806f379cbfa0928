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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "phasecode/spectrum.hpp"
#include "phasecode/tomography.hpp"
#include "test_util.hpp"

namespace phasecode {
namespace {

PauliCoeffs without_identity(PauliCoeffs c) {
  c(0, 0) = 0.0;
  return c;
}

double max_line(const PeakIntegrals &p) {
  return std::max({std::abs(p.a_high), std::abs(p.a_low), std::abs(p.b_high), std::abs(p.b_low)});
}

TEST(Spectrum, LineIntegralsMatchPeakFormulas) {
  const double t2a = 0.35, t2b = 0.5;
  for (Mode m : {Mode::Coded, Mode::Control}) {
    const Matrix4 rho = run_trial(0.8, 0.12, m, testing::settings_for(0.1, 0.2, 0.12));
    const PeakIntegrals exact = peak_integrals(rho);
    const Spectrum s = synthesize_spectrum(rho, t2a, t2b, SpectrumGrid::for_lines(kDefaultJHz, t2a, t2b));
    const PeakIntegrals num = integrate_lines(s);
    const double scale = max_line(exact);
    EXPECT_LT(std::abs(num.a_high - exact.a_high), 0.01 * scale);
    EXPECT_LT(std::abs(num.a_low - exact.a_low), 0.01 * scale);
    EXPECT_LT(std::abs(num.b_high - exact.b_high), 0.01 * scale);
    EXPECT_LT(std::abs(num.b_low - exact.b_low), 0.01 * scale);
  }
}

TEST(Spectrum, RejectsUnresolvedGrids) {
  const Matrix4 rho = pure_ancilla_state();
  SpectrumGrid g = SpectrumGrid::for_lines(kDefaultJHz, 0.35, 0.5);
  SpectrumGrid coarse = g;
  coarse.step_hz *= 10;
  EXPECT_THROW(synthesize_spectrum(rho, 0.35, 0.5, coarse), std::invalid_argument);
  SpectrumGrid narrow = g;
  narrow.span_hz = kDefaultJHz / 2;
  EXPECT_THROW(synthesize_spectrum(rho, 0.35, 0.5, narrow), std::invalid_argument);
  EXPECT_THROW(line_half_width(0.0), std::invalid_argument);
  EXPECT_NEAR(line_half_width(0.5), 1.0 / kPi, 1e-15);
}

TEST(Tomography, NineReadoutSettings) {
  EXPECT_EQ(tomography_readouts().size(), 9u);
  EXPECT_EQ(simulate_readings(pure_ancilla_state()).size(), 9u);
}

TEST(Tomography, RandomStatesRoundTrip) {
  std::mt19937_64 rng(42);
  for (int n = 0; n < 100; ++n) {
    const Matrix4 rho = testing::random_hermitian(rng, true);
    EXPECT_LT(tomography(rho).max_abs_diff(without_identity(pauli_decompose(rho))), 1e-10);
  }
}

TEST(Tomography, PipelineStagesRoundTrip) {
  const TrialSettings s = testing::settings_for(0.2, 0.1, 0.1);
  for (Mode m : {Mode::Coded, Mode::Control}) {
    const TrialStages st = run_trial_stages(kPi / 3, 0.1, m, s);
    for (const Matrix4 *rho : {&st.rho0, &st.rho1, &st.rho3, &st.rho4, &st.rho5}) {
      EXPECT_LT(tomography(*rho).max_abs_diff(without_identity(pauli_decompose(*rho))), 1e-10);
    }
  }
}

TEST(Tomography, IdentityIsInvisible) {
  const PauliCoeffs c = tomography(Matrix4::Identity());
  EXPECT_LT(c.max_abs_diff(PauliCoeffs{}), 1e-12);
}

TEST(Tomography, RejectsWrongReadingCount) {
  std::vector<Readings> r = simulate_readings(pure_ancilla_state());
  r.pop_back();
  EXPECT_THROW(reconstruct_from_readings(r), std::invalid_argument);
}

}  // namespace
}  // namespace phasecode
