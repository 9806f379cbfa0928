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

#include <optional>
#include <string_view>
#include <vector>

#include "phasecode/channels.hpp"
#include "phasecode/gates.hpp"
#include "phasecode/qcore.hpp"

namespace phasecode {

enum class Mode { Coded, Control };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view text);

/// Axes of the two refocusing pi pulses on the ancilla during storage.
/// SameAxis: +y then +y. Alternating: +y then -y.
enum class RefocusScheme { SameAxis, Alternating };

std::string_view to_string(RefocusScheme r);
RefocusScheme parse_refocus(std::string_view text);

/// Every noise process the simulator knows about, with enable flags.
struct NoiseConfig {
  bool dephasing = true;
  double t2_star_a = 0.35;
  double t2_star_b = 0.50;

  bool amplitude_relaxation = false;
  AmplitudeRelax relax;

  bool rf_inhomogeneity = false;
  double rf_attenuation_a = 0.96;
  double rf_attenuation_b = 0.92;
  double rf_truncation = 5.0;
  int rf_nodes = 64;

  /// Dephasing probabilities after a storage time (zero when disabled).
  DampingParams damping(double t_d) const;
  /// Calibrated RF distribution, or the homogeneous one when disabled.
  RfInhomogeneity rf() const;

  static NoiseConfig ideal();
};

/// Everything run_trial needs besides theta, t_d and mode.
struct TrialSettings {
  double j_hz = kDefaultJHz;
  NoiseConfig noise = NoiseConfig::ideal();
  RefocusScheme refocus = RefocusScheme::Alternating;
  /// Start from the temporally labeled thermal state instead of the bare
  /// sigma_z (x) |0><0| input. Spin-A observables are unchanged.
  bool labeled_input = false;
  double omega_a = 4.0;
  double omega_b = 1.0;
  /// Replacements for the library U_enc / U_dec sequences.
  std::optional<PulseSequence> encoder;
  std::optional<PulseSequence> decoder;

  PulseSequence encoder_sequence() const;
  PulseSequence decoder_sequence() const;
};

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

/// (omega_a/2) sigma_z (x) I + (omega_b/2) I (x) sigma_z.
Matrix4 thermal_state(double omega_a, double omega_b);

/// sigma_z (x) |0><0|: the labeled input with omega_a as the unit of signal.
Matrix4 pure_ancilla_state();

/// Sum over k of P_k rho_th P_k^dagger with P_k = compile(preps[k]).
Matrix4 temporal_label(const std::vector<PulseSequence> &preps, const Matrix4 &rho_th, double j_hz = kDefaultJHz);

/// temporal_label({identity, CN_tilde}) of the thermal state, divided by omega_a.
Matrix4 labeled_initial_state(double omega_a, double omega_b, double j_hz = kDefaultJHz);

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

/// Storage for t_d: [J(t_d/2) + noise, refocus pi on B] twice. Dephasing
/// probabilities are computed per half interval. Refocusing pulses are scaled
/// by scales.b.
Matrix4 run_storage(const Matrix4 &rho, double t_d, const TrialSettings &settings, RfScales scales = {});

/// The states of one trial: rho0 input, rho1 after Y_a(theta), rho3 after
/// encoding, rho4 after storage, rho5 after decoding. In control mode
/// rho3 = rho1 and rho5 = rho4.
struct TrialStages {
  Matrix4 rho0;
  Matrix4 rho1;
  Matrix4 rho3;
  Matrix4 rho4;
  Matrix4 rho5;
};

TrialStages run_trial_stages(double theta, double t_d, Mode mode, const TrialSettings &settings,
                             RfScales scales = {});

/// Final state rho5 of run_trial_stages.
Matrix4 run_trial(double theta, double t_d, Mode mode, const TrialSettings &settings = {}, RfScales scales = {});

// ---------------------------------------------------------------------------
// Readout
// ---------------------------------------------------------------------------

/// Integrated areas of the four spectral lines.
struct PeakIntegrals {
  Complex a_high;
  Complex a_low;
  Complex b_high;
  Complex b_low;
};

/// Peak integrals of the state present at acquisition.
PeakIntegrals peak_integrals(const PauliCoeffs &c);
inline PeakIntegrals peak_integrals(const Matrix4 &rho) { return peak_integrals(pauli_decompose(rho)); }

/// Spin-A output read through an X_a pulse before acquisition. accepted holds
/// the (z, x) Pauli coefficients of spin A in the B = |0> block, taken from the
/// low line; rejected those of the B = |1> block, from the high line. y is not
/// observed and stays 0. raw holds the coefficients at acquisition.
struct DecodedOutput {
  BlochVector accepted;
  BlochVector rejected;
  PauliCoeffs raw;
};

/// Decodes coefficients already rotated by the readout pulse.
DecodedOutput decode_acquired(const PauliCoeffs &acquired);

/// Applies X_a (RF-scaled by scale_a) to rho5 and decodes the A lines.
DecodedOutput readout(const Matrix4 &rho5, double scale_a = 1.0);

/// Trace of the accepted block for a unit-trace input with spin A maximally
/// mixed: (1-pa)(1-pb) + pa pb for the ideal code, 1 for control.
double acceptance_weight(double t_d, Mode mode, const TrialSettings &settings, RfScales scales = {});

/// Result of one (theta, t_d, mode) point, averaged over the RF ensemble when
/// enabled.
struct TrialRecord {
  Mode mode = Mode::Coded;
  double theta = 0.0;
  double t_d = 0.0;
  DecodedOutput output;
  double acceptance_weight = 1.0;
};

TrialRecord simulate_trial(double theta, double t_d, Mode mode, const TrialSettings &settings, int parallelism = 1);

/// As simulate_trial with an already calibrated RF distribution.
TrialRecord simulate_trial(double theta, double t_d, Mode mode, const TrialSettings &settings,
                           const RfInhomogeneity &rf, int parallelism = 1);

/// Default storage times n * 12/J, n = 0..count-1.
std::vector<double> default_storage_times(double j_hz = kDefaultJHz, int count = 6);

/// count equally spaced angles from 0 to pi inclusive.
std::vector<double> default_theta_grid(int count = 11);

}  // namespace phasecode
