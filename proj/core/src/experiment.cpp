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

#include "phasecode/experiment.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace phasecode {

namespace {

Matrix4 apply(const PulseSequence &seq, const Matrix4 &rho, double j_hz, RfScales scales) {
  const Matrix4 u = compile(seq, j_hz, scales);
  return u * rho * u.adjoint();
}

Matrix4 storage_half(const Matrix4 &rho, double half, const TrialSettings &s) {
  const Matrix4 u = j_coupling_unitary(half, s.j_hz);
  Matrix4 out = u * rho * u.adjoint();
  if (s.noise.dephasing) {
    out = phase_damp_2q(out, s.noise.damping(half));
  }
  if (s.noise.amplitude_relaxation) {
    out = relax_longitudinal(out, half, s.noise.relax);
  }
  return out;
}

TrialStages pipeline(const Matrix4 &input, double theta, double t_d, Mode mode, const TrialSettings &s,
                     RfScales scales) {
  GateOptions opts;
  opts.j_hz = s.j_hz;
  opts.theta = theta;
  TrialStages st;
  st.rho0 = input;
  st.rho1 = apply(gate_library("Y_a", opts), input, s.j_hz, scales);
  st.rho3 = mode == Mode::Coded ? apply(s.encoder_sequence(), st.rho1, s.j_hz, scales) : st.rho1;
  st.rho4 = run_storage(st.rho3, t_d, s, scales);
  st.rho5 = mode == Mode::Coded ? apply(s.decoder_sequence(), st.rho4, s.j_hz, scales) : st.rho4;
  return st;
}

}  // namespace

std::string_view to_string(Mode m) { return m == Mode::Coded ? "coded" : "control"; }

Mode parse_mode(std::string_view text) {
  if (text == "coded") return Mode::Coded;
  if (text == "control") return Mode::Control;
  throw std::invalid_argument("unknown mode: " + std::string(text));
}

std::string_view to_string(RefocusScheme r) { return r == RefocusScheme::SameAxis ? "same_axis" : "alternating"; }

RefocusScheme parse_refocus(std::string_view text) {
  if (text == "same_axis") return RefocusScheme::SameAxis;
  if (text == "alternating") return RefocusScheme::Alternating;
  throw std::invalid_argument("unknown refocus scheme: " + std::string(text));
}

DampingParams NoiseConfig::damping(double t_d) const {
  if (!dephasing) {
    return {};
  }
  return DampingParams::from_storage(t_d, t2_star_a, t2_star_b);
}

RfInhomogeneity NoiseConfig::rf() const {
  if (!rf_inhomogeneity) {
    return RfInhomogeneity::homogeneous();
  }
  return RfInhomogeneity::calibrated(rf_attenuation_a, rf_attenuation_b, rf_truncation, rf_nodes);
}

NoiseConfig NoiseConfig::ideal() { return {}; }

PulseSequence TrialSettings::encoder_sequence() const {
  if (encoder) return *encoder;
  GateOptions opts;
  opts.j_hz = j_hz;
  return gate_library("U_enc", opts);
}

PulseSequence TrialSettings::decoder_sequence() const {
  if (decoder) return *decoder;
  GateOptions opts;
  opts.j_hz = j_hz;
  return gate_library("U_dec", opts);
}

Matrix4 thermal_state(double omega_a, double omega_b) {
  return 0.5 * omega_a * pauli_product(3, 0) + 0.5 * omega_b * pauli_product(0, 3);
}

Matrix4 pure_ancilla_state() { return tensor(pauli(3), projector(0)); }

Matrix4 temporal_label(const std::vector<PulseSequence> &preps, const Matrix4 &rho_th, double j_hz) {
  Matrix4 sum = Matrix4::Zero();
  for (const PulseSequence &p : preps) {
    sum += apply(p, rho_th, j_hz, {});
  }
  return sum;
}

Matrix4 labeled_initial_state(double omega_a, double omega_b, double j_hz) {
  if (!(omega_a > 0.0)) {
    throw std::invalid_argument("omega_a must be > 0");
  }
  GateOptions opts;
  opts.j_hz = j_hz;
  const std::vector<PulseSequence> preps = {PulseSequence{}, gate_library("CN_tilde", opts)};
  return temporal_label(preps, thermal_state(omega_a, omega_b), j_hz) / omega_a;
}

Matrix4 run_storage(const Matrix4 &rho, double t_d, const TrialSettings &settings, RfScales scales) {
  if (!(t_d >= 0.0)) {
    throw std::invalid_argument("storage time must be >= 0");
  }
  const double half = t_d / 2.0;
  const Axis second = settings.refocus == RefocusScheme::SameAxis ? Axis::Y : Axis::MinusY;
  const Matrix4 pi1 = rotation_unitary(Spin::B, Axis::Y, kPi, scales.b);
  const Matrix4 pi2 = rotation_unitary(Spin::B, second, kPi, scales.b);
  Matrix4 out = storage_half(rho, half, settings);
  out = pi1 * out * pi1.adjoint();
  out = storage_half(out, half, settings);
  return pi2 * out * pi2.adjoint();
}

TrialStages run_trial_stages(double theta, double t_d, Mode mode, const TrialSettings &settings, RfScales scales) {
  const Matrix4 input = settings.labeled_input
                            ? labeled_initial_state(settings.omega_a, settings.omega_b, settings.j_hz)
                            : pure_ancilla_state();
  return pipeline(input, theta, t_d, mode, settings, scales);
}

Matrix4 run_trial(double theta, double t_d, Mode mode, const TrialSettings &settings, RfScales scales) {
  return run_trial_stages(theta, t_d, mode, settings, scales).rho5;
}

PeakIntegrals peak_integrals(const PauliCoeffs &c) {
  const Complex i{0.0, 1.0};
  PeakIntegrals p;
  p.a_high = -(i * (c(1, 0) - c(1, 3)) + c(2, 0) - c(2, 3));
  p.a_low = -(i * (c(1, 0) + c(1, 3)) + c(2, 0) + c(2, 3));
  p.b_high = -(i * (c(0, 1) - c(3, 1)) + c(0, 2) - c(3, 2));
  p.b_low = -(i * (c(0, 1) + c(3, 1)) + c(0, 2) + c(3, 2));
  return p;
}

DecodedOutput decode_acquired(const PauliCoeffs &acquired) {
  const PeakIntegrals p = peak_integrals(acquired);
  DecodedOutput out;
  out.accepted = {-p.a_low.imag(), 0.0, p.a_low.real()};
  out.rejected = {-p.a_high.imag(), 0.0, p.a_high.real()};
  out.raw = acquired;
  return out;
}

DecodedOutput readout(const Matrix4 &rho5, double scale_a) {
  const Matrix4 u = rotation_unitary(Spin::A, Axis::X, kPi / 2, scale_a);
  return decode_acquired(pauli_decompose(u * rho5 * u.adjoint()));
}

double acceptance_weight(double t_d, Mode mode, const TrialSettings &settings, RfScales scales) {
  const Matrix4 input = tensor(0.5 * Matrix2::Identity(), projector(0));
  const Matrix4 out = pipeline(input, 0.0, t_d, mode, settings, scales).rho5;
  return project_ancilla(out, 0).trace().real();
}

TrialRecord simulate_trial(double theta, double t_d, Mode mode, const TrialSettings &settings, int parallelism) {
  return simulate_trial(theta, t_d, mode, settings, settings.noise.rf(), parallelism);
}

TrialRecord simulate_trial(double theta, double t_d, Mode mode, const TrialSettings &settings,
                           const RfInhomogeneity &rf, int parallelism) {
  const ScaledExperiment acquire = [&](double sa, double sb) {
    const Matrix4 rho5 = run_trial(theta, t_d, mode, settings, {sa, sb});
    const Matrix4 u = rotation_unitary(Spin::A, Axis::X, kPi / 2, sa);
    return pauli_decompose(u * rho5 * u.adjoint());
  };
  const ScaledExperiment weight = [&](double sa, double sb) {
    PauliCoeffs c;
    c(0, 0) = acceptance_weight(t_d, mode, settings, {sa, sb});
    return c;
  };
  TrialRecord rec;
  rec.mode = mode;
  rec.theta = theta;
  rec.t_d = t_d;
  rec.output = decode_acquired(ensemble_average(acquire, rf, parallelism));
  rec.acceptance_weight = ensemble_average(weight, rf, parallelism)(0, 0);
  return rec;
}

std::vector<double> default_storage_times(double j_hz, int count) {
  std::vector<double> out;
  for (int n = 0; n < count; ++n) {
    out.push_back(12.0 * n / j_hz);
  }
  return out;
}

std::vector<double> default_theta_grid(int count) {
  if (count < 2) {
    throw std::invalid_argument("theta grid needs at least two points");
  }
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    out.push_back(kPi * k / (count - 1));
  }
  return out;
}

}  // namespace phasecode
