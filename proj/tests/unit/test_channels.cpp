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

#include <cmath>
#include <random>

#include "phasecode/channels.hpp"
#include "test_util.hpp"

namespace phasecode {
namespace {

Matrix4 explicit_kraus_2q(const Matrix4 &rho, double pa, double pb) {
  const Matrix4 za = pauli_product(3, 0);
  const Matrix4 zb = pauli_product(0, 3);
  const Matrix4 zz = pauli_product(3, 3);
  return (1 - pa) * (1 - pb) * rho + pa * (1 - pb) * za * rho * za + (1 - pa) * pb * zb * rho * zb +
         pa * pb * zz * rho * zz;
}

TEST(Channels, DephasingProbability) {
  EXPECT_DOUBLE_EQ(dephasing_probability(0.0, 0.4), 0.0);
  EXPECT_NEAR(dephasing_probability(0.4, 0.4), 0.5 * (1 - std::exp(-1.0)), 1e-15);
  EXPECT_NEAR(dephasing_probability(1e3, 0.4), 0.5, 1e-15);
  EXPECT_THROW(dephasing_probability(0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(dephasing_probability(-0.1, 1.0), std::invalid_argument);
  const DampingParams p = DampingParams::from_storage(0.2, 0.35, 0.5);
  EXPECT_DOUBLE_EQ(p.p_a, dephasing_probability(0.2, 0.35));
  EXPECT_DOUBLE_EQ(p.p_b, dephasing_probability(0.2, 0.5));
}

TEST(Channels, SingleSpinDampingShrinksCoherence) {
  std::mt19937_64 rng(1);
  const Matrix2 rho = testing::random_hermitian2(rng);
  const double p = 0.13;
  const Matrix2 out = phase_damp_1q(rho, p);
  EXPECT_NEAR(std::abs(out(0, 0) - rho(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out(1, 1) - rho(1, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out(0, 1) - (1 - 2 * p) * rho(0, 1)), 0.0, 1e-15);
  EXPECT_THROW(phase_damp_1q(rho, -0.01), std::invalid_argument);
  EXPECT_THROW(phase_damp_1q(rho, 0.51), std::invalid_argument);
}

TEST(Channels, TwoSpinDampingMatchesOperatorSum) {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 20; ++n) {
    const Matrix4 rho = testing::random_hermitian(rng);
    const double pa = 0.5 * n / 20.0, pb = 0.02 * n;
    const Matrix4 out = phase_damp_2q(rho, pa, pb);
    EXPECT_LT(max_abs_diff(out, explicit_kraus_2q(rho, pa, pb)), 1e-13);
    EXPECT_NEAR(std::abs(out.trace() - rho.trace()), 0.0, 1e-13);
    EXPECT_TRUE(is_hermitian(out));
  }
}

TEST(Channels, TwoSpinDampingIsProductOfSingleSpinChannels) {
  std::mt19937_64 rng(3);
  const Matrix2 a = testing::random_hermitian2(rng);
  const Matrix2 b = testing::random_hermitian2(rng);
  const Matrix4 out = phase_damp_2q(tensor(a, b), 0.2, 0.07);
  EXPECT_LT(max_abs_diff(out, tensor(phase_damp_1q(a, 0.2), phase_damp_1q(b, 0.07))), 1e-14);
}

TEST(Channels, DampingComposesAsSemigroup) {
  std::mt19937_64 rng(4);
  const Matrix4 rho = testing::random_hermitian(rng);
  const double t2a = 0.35, t2b = 0.5, t1 = 0.04, t2 = 0.09;
  const Matrix4 twice =
      phase_damp_2q(phase_damp_2q(rho, DampingParams::from_storage(t1, t2a, t2b)), DampingParams::from_storage(t2, t2a, t2b));
  const Matrix4 once = phase_damp_2q(rho, DampingParams::from_storage(t1 + t2, t2a, t2b));
  EXPECT_LT(max_abs_diff(twice, once), 1e-14);
}

TEST(Channels, DampingCommutesWithCoupling) {
  std::mt19937_64 rng(5);
  const Matrix4 rho = testing::random_hermitian(rng);
  const Matrix4 u = j_coupling_unitary(0.003, kDefaultJHz);
  EXPECT_LT(max_abs_diff(phase_damp_2q(conjugate(u, rho), 0.1, 0.2), conjugate(u, phase_damp_2q(rho, 0.1, 0.2))),
            1e-14);
}

TEST(Channels, LongitudinalRelaxation) {
  EXPECT_DOUBLE_EQ(amplitude_relax_z(0.3, 0.0, 9.0), 0.3);
  EXPECT_NEAR(amplitude_relax_z(0.3, 9.0, 9.0, 1.0), 1.0 - 0.7 * std::exp(-1.0), 1e-15);
  EXPECT_THROW(amplitude_relax_z(0.3, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(amplitude_relax_z(0.3, -1.0, 1.0), std::invalid_argument);

  const Matrix4 rho = tensor(pauli(3), 0.5 * (pauli(0) + pauli(3))) + 0.4 * pauli_product(1, 0);
  AmplitudeRelax params;
  const double t = 1.5;
  const PauliCoeffs c = pauli_decompose(relax_longitudinal(rho, t, params));
  const double ea = std::exp(-t / params.t1_a), eb = std::exp(-t / params.t1_b);
  EXPECT_NEAR(c(3, 0), params.z_inf_a + (0.5 - params.z_inf_a) * ea, 1e-14);
  EXPECT_NEAR(c(0, 3), params.z_inf_b * (1 - eb), 1e-14);
  EXPECT_NEAR(c(3, 3), 0.5 * ea * eb, 1e-14);
  EXPECT_NEAR(c(1, 0), 0.4, 1e-14);
}

TEST(Channels, LorentzianRuleIsNormalizedAndSymmetric) {
  const ScaleRule r = lorentzian_rule(0.1, 5.0, 16);
  ASSERT_EQ(r.deviations.size(), 16u);
  double sum = 0.0;
  for (size_t k = 0; k < r.weights.size(); ++k) {
    sum += r.weights[k];
    EXPECT_GT(r.weights[k], 0.0);
    EXPECT_NEAR(r.deviations[k], -r.deviations[15 - k], 1e-15);
    EXPECT_NEAR(r.weights[k], r.weights[15 - k], 1e-15);
    EXPECT_LE(std::abs(r.deviations[k]), 0.5);
  }
  EXPECT_NEAR(sum, 1.0, 1e-14);
  const ScaleRule z = lorentzian_rule(0.0, 5.0, 16);
  ASSERT_EQ(z.deviations.size(), 1u);
  EXPECT_EQ(z.deviations[0], 0.0);
  EXPECT_THROW(lorentzian_rule(0.1, 5.0, 1), std::invalid_argument);
  EXPECT_THROW(lorentzian_rule(-0.1, 5.0, 8), std::invalid_argument);
}

TEST(Channels, LorentzianRuleIntegratesClosedForm) {
  // E[delta^2] of a Lorentzian truncated at T*gamma is gamma^2 (T - atan T) / atan T.
  const double g = 0.08, trunc = 5.0;
  const ScaleRule r = lorentzian_rule(g, trunc, 64);
  double m2 = 0.0;
  for (size_t k = 0; k < r.weights.size(); ++k) m2 += r.weights[k] * r.deviations[k] * r.deviations[k];
  EXPECT_NEAR(m2, g * g * (trunc - std::atan(trunc)) / std::atan(trunc), 1e-12);
}

TEST(Channels, GammaCalibrationHitsTarget) {
  for (double target : {0.96, 0.92, 0.99}) {
    const double g = calibrate_gamma(target);
    EXPECT_NEAR(pi2_attenuation(g, 5.0, 64), target, 1e-5);
  }
  EXPECT_NEAR(pi2_attenuation(0.0, 5.0, 64), 1.0, 1e-15);
  EXPECT_THROW(calibrate_gamma(0.4), std::invalid_argument);
  const RfInhomogeneity rf = RfInhomogeneity::calibrated(0.96, 0.92);
  EXPECT_GT(rf.gamma_b, rf.gamma_a);
  EXPECT_NEAR(rf.gamma_a, 0.112323, 5e-6);
  EXPECT_NEAR(rf.gamma_b, 0.161134, 5e-6);
}

PauliCoeffs toy_experiment(double sa, double sb) {
  const Matrix4 rho = tensor(pauli(3), pauli(0)) + tensor(pauli(0), pauli(3));
  const Matrix4 u = rotation_unitary(Spin::B, Axis::Y, kPi / 2, sb) * rotation_unitary(Spin::A, Axis::X, kPi / 2, sa);
  return pauli_decompose(conjugate(u, rho));
}

TEST(Channels, EnsembleAverageOfSinglePulseIsAttenuation) {
  const RfInhomogeneity rf = RfInhomogeneity::calibrated(0.96, 0.92);
  const PauliCoeffs c = ensemble_average(toy_experiment, rf, 1);
  EXPECT_NEAR(-c(2, 0), 0.96, 1e-5);
  EXPECT_NEAR(c(0, 1), 0.92, 1e-5);
}

TEST(Channels, EnsembleAverageIndependentOfThreadCount) {
  const RfInhomogeneity rf = RfInhomogeneity::calibrated(0.96, 0.92, 5.0, 16);
  const PauliCoeffs one = ensemble_average(toy_experiment, rf, 1);
  const PauliCoeffs four = ensemble_average(toy_experiment, rf, 4);
  EXPECT_EQ(one.flat(), four.flat());
}

TEST(Channels, HomogeneousEnsembleIsSingleExperiment) {
  const PauliCoeffs c = ensemble_average(toy_experiment, RfInhomogeneity::homogeneous(), 1);
  EXPECT_NEAR(c.max_abs_diff(toy_experiment(1.0, 1.0)), 0.0, 1e-15);
}

TEST(Channels, QuadratureConvergesUnderNodeDoubling) {
  const RfInhomogeneity r32 = RfInhomogeneity::calibrated(0.96, 0.92, 5.0, 32);
  RfInhomogeneity r64 = r32;
  r64.nodes = 64;
  const PauliCoeffs a = ensemble_average(toy_experiment, r32, 1);
  const PauliCoeffs b = ensemble_average(toy_experiment, r64, 1);
  for (size_t k = 0; k < 16; ++k) {
    if (std::abs(b.flat()[k]) > 0.01) {
      EXPECT_LT(std::abs(a.flat()[k] / b.flat()[k] - 1.0), 1e-3);
    }
  }
}

TEST(Channels, MonteCarloAgreesWithQuadrature) {
  const RfInhomogeneity rf = RfInhomogeneity::calibrated(0.96, 0.92);
  const PauliCoeffs q = ensemble_average(toy_experiment, rf, 1);
  const PauliCoeffs m = monte_carlo_average(toy_experiment, rf, 40000, 17);
  EXPECT_LT(q.max_abs_diff(m), 5e-3);
  const PauliCoeffs again = monte_carlo_average(toy_experiment, rf, 40000, 17);
  EXPECT_EQ(m.flat(), again.flat());
  EXPECT_THROW(monte_carlo_average(toy_experiment, rf, 0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace phasecode
