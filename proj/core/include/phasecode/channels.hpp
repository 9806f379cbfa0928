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

#include <cstdint>
#include <functional>
#include <vector>

#include "phasecode/gates.hpp"
#include "phasecode/qcore.hpp"

namespace phasecode {

// ---------------------------------------------------------------------------
// Phase damping
// ---------------------------------------------------------------------------

/// p = (1 - exp(-t/T2*)) / 2, the probability of a sigma_z event after time t.
double dephasing_probability(double t, double t2_star);

/// Error probabilities of both spins after a storage time.
struct DampingParams {
  double p_a = 0.0;
  double p_b = 0.0;

  static DampingParams from_storage(double t_d, double t2_star_a, double t2_star_b);
};

/// (1-p) rho + p sigma_z rho sigma_z. Throws std::invalid_argument unless 0 <= p <= 1/2.
Matrix2 phase_damp_1q(const Matrix2 &rho, double p);

/// Independent phase damping of both spins: four-term operator sum with
/// weights (1-pa)(1-pb), (1-pa)pb, pa(1-pb), pa pb.
Matrix4 phase_damp_2q(const Matrix4 &rho, double p_a, double p_b);
inline Matrix4 phase_damp_2q(const Matrix4 &rho, DampingParams p) { return phase_damp_2q(rho, p.p_a, p.p_b); }

// ---------------------------------------------------------------------------
// Longitudinal (T1) relaxation, phenomenological
// ---------------------------------------------------------------------------

/// z(t) = z_inf + (z0 - z_inf) exp(-t/T1). Throws unless T1 > 0 and t >= 0.
double amplitude_relax_z(double z0, double t, double t1, double z_inf = 1.0);

/// Relaxation times and equilibrium z coefficients (in units of the spin-A
/// signal) of both spins.
struct AmplitudeRelax {
  double t1_a = 9.0;
  double t1_b = 13.5;
  double z_inf_a = 1.0;
  double z_inf_b = 0.25;
};

/// Applies amplitude_relax_z to the longitudinal Pauli coefficients of each
/// spin: c_3j (spin A) and c_i3 (spin B). The single-spin terms c_30 and c_03
/// relax toward z_inf_a and z_inf_b; correlated terms decay toward zero.
/// Coherences are untouched.
Matrix4 relax_longitudinal(const Matrix4 &rho, double t, const AmplitudeRelax &params);

// ---------------------------------------------------------------------------
// RF field inhomogeneity
// ---------------------------------------------------------------------------

/// Discrete rule for the relative deviation delta of the RF amplitude,
/// distributed as a Lorentzian of half-width gamma truncated to
/// |delta| <= truncation * gamma and renormalized. Weights sum to one.
struct ScaleRule {
  std::vector<double> deviations;
  std::vector<double> weights;
};

/// Gauss-Legendre nodes mapped to the truncated support. gamma == 0 yields the
/// single node delta = 0.
ScaleRule lorentzian_rule(double gamma, double truncation, int nodes);

/// Ensemble average of sin((1 + delta) pi/2): the transverse signal left after
/// a nominal pi/2 pulse.
double pi2_attenuation(double gamma, double truncation, int nodes);

/// Finds gamma in [0, 0.5] with pi2_attenuation(gamma) == target by bisection
/// (tolerance 1e-6 on gamma). Throws std::invalid_argument unless
/// 0.5 < target <= 1 and NumericError when the bracket holds no root.
double calibrate_gamma(double target_attenuation, double truncation = 5.0, int nodes = 64);

struct RfInhomogeneity {
  double gamma_a = 0.0;
  double gamma_b = 0.0;
  double target_attenuation_a = 1.0;
  double target_attenuation_b = 1.0;
  double truncation = 5.0;
  int nodes = 64;

  /// Calibrates both half-widths against the target pi/2 attenuations.
  static RfInhomogeneity calibrated(double target_a, double target_b, double truncation = 5.0, int nodes = 64);
  /// Zero-width distribution: every pulse is ideal.
  static RfInhomogeneity homogeneous() { return {}; }
};

/// One deterministic experiment evaluated at fixed per-spin RF scales. Must be
/// safe to call concurrently with distinct arguments.
using ScaledExperiment = std::function<PauliCoeffs(double scale_a, double scale_b)>;

/// Tensor-product quadrature of the experiment over the two independent
/// truncated Lorentzians. The scale of each spin is held fixed for all pulses
/// of one evaluation (perfectly correlated pulse errors). Rows of the grid may
/// be evaluated on `parallelism` threads; the reduction order is fixed, so the
/// result does not depend on the thread count.
PauliCoeffs ensemble_average(const ScaledExperiment &experiment, const RfInhomogeneity &rf, int parallelism = 1);

/// Plain Monte-Carlo estimate of the same average (inverse-CDF sampling of the
/// truncated Lorentzians). Cross-check only.
PauliCoeffs monte_carlo_average(const ScaledExperiment &experiment, const RfInhomogeneity &rf, int samples,
                                std::uint64_t seed);

}  // namespace phasecode
