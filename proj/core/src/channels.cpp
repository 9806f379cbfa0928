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

#include "phasecode/channels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include <gsl/gsl_integration.h>

namespace phasecode {

namespace {

void check_probability(double p, const char *what) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::invalid_argument(std::string(what) + ": dephasing probability must lie in [0, 1/2]");
  }
}

Matrix2 sz_conj(const Matrix2 &rho) {
  Matrix2 out = rho;
  out(0, 1) = -rho(0, 1);
  out(1, 0) = -rho(1, 0);
  return out;
}

}  // namespace

double dephasing_probability(double t, double t2_star) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("storage time must be >= 0");
  }
  if (!(t2_star > 0.0)) {
    throw std::invalid_argument("T2* must be > 0");
  }
  return 0.5 * (1.0 - std::exp(-t / t2_star));
}

DampingParams DampingParams::from_storage(double t_d, double t2_star_a, double t2_star_b) {
  return {dephasing_probability(t_d, t2_star_a), dephasing_probability(t_d, t2_star_b)};
}

Matrix2 phase_damp_1q(const Matrix2 &rho, double p) {
  check_probability(p, "phase_damp_1q");
  return (1.0 - p) * rho + p * sz_conj(rho);
}

Matrix4 phase_damp_2q(const Matrix4 &rho, double p_a, double p_b) {
  check_probability(p_a, "phase_damp_2q");
  check_probability(p_b, "phase_damp_2q");
  const Matrix4 &za = pauli_product(3, 0);
  const Matrix4 &zb = pauli_product(0, 3);
  const Matrix4 &zz = pauli_product(3, 3);
  return (1 - p_a) * (1 - p_b) * rho + (1 - p_a) * p_b * (zb * rho * zb) + p_a * (1 - p_b) * (za * rho * za) +
         p_a * p_b * (zz * rho * zz);
}

double amplitude_relax_z(double z0, double t, double t1, double z_inf) {
  if (!(t1 > 0.0)) {
    throw std::invalid_argument("T1 must be > 0");
  }
  if (!(t >= 0.0)) {
    throw std::invalid_argument("relaxation time must be >= 0");
  }
  return z_inf + (z0 - z_inf) * std::exp(-t / t1);
}

Matrix4 relax_longitudinal(const Matrix4 &rho, double t, const AmplitudeRelax &params) {
  if (!(params.t1_a > 0.0) || !(params.t1_b > 0.0) || !(t >= 0.0)) {
    throw std::invalid_argument("relax_longitudinal: need T1 > 0 and t >= 0");
  }
  PauliCoeffs c = pauli_decompose(rho);
  const double ea = std::exp(-t / params.t1_a);
  const double eb = std::exp(-t / params.t1_b);
  c(3, 0) = amplitude_relax_z(c(3, 0), t, params.t1_a, params.z_inf_a);
  c(0, 3) = amplitude_relax_z(c(0, 3), t, params.t1_b, params.z_inf_b);
  for (int j = 1; j < 4; ++j) {
    c(3, j) *= ea;
    c(j, 3) *= eb;
  }
  // c_33 picked up both factors in the loop; that is the product decay.
  const Matrix4 anti = (rho - rho.adjoint()) * 0.5;
  return reconstruct(c) + anti;
}

ScaleRule lorentzian_rule(double gamma, double truncation, int nodes) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("Lorentzian half-width must be >= 0");
  }
  if (!(truncation > 0.0)) {
    throw std::invalid_argument("truncation must be > 0");
  }
  if (nodes < 2) {
    throw std::invalid_argument("node count must be >= 2");
  }
  ScaleRule rule;
  if (gamma == 0.0) {
    rule.deviations = {0.0};
    rule.weights = {1.0};
    return rule;
  }
  gsl_integration_glfixed_table *table = gsl_integration_glfixed_table_alloc(static_cast<size_t>(nodes));
  if (table == nullptr) {
    throw NumericError("failed to allocate Gauss-Legendre table");
  }
  const double half = truncation * gamma;
  double total = 0.0;
  for (int k = 0; k < nodes; ++k) {
    double x = 0.0;
    double w = 0.0;
    gsl_integration_glfixed_point(-half, half, static_cast<size_t>(k), &x, &w, table);
    const double density = gamma / (kPi * (x * x + gamma * gamma));
    rule.deviations.push_back(x);
    rule.weights.push_back(w * density);
    total += w * density;
  }
  gsl_integration_glfixed_table_free(table);
  for (double &w : rule.weights) {
    w /= total;
  }
  return rule;
}

double pi2_attenuation(double gamma, double truncation, int nodes) {
  const ScaleRule rule = lorentzian_rule(gamma, truncation, nodes);
  double s = 0.0;
  for (size_t k = 0; k < rule.weights.size(); ++k) {
    s += rule.weights[k] * std::sin((1.0 + rule.deviations[k]) * kPi / 2);
  }
  return s;
}

double calibrate_gamma(double target_attenuation, double truncation, int nodes) {
  if (!(target_attenuation > 0.5 && target_attenuation <= 1.0)) {
    throw std::invalid_argument("target attenuation must lie in (0.5, 1]");
  }
  if (target_attenuation == 1.0) {
    return 0.0;
  }
  double lo = 0.0;
  double hi = 0.5;
  auto f = [&](double g) { return pi2_attenuation(g, truncation, nodes) - target_attenuation; };
  if (f(hi) > 0.0) {
    throw NumericError("calibrate_gamma: target attenuation not reached for gamma <= 0.5");
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

RfInhomogeneity RfInhomogeneity::calibrated(double target_a, double target_b, double truncation, int nodes) {
  RfInhomogeneity rf;
  rf.target_attenuation_a = target_a;
  rf.target_attenuation_b = target_b;
  rf.truncation = truncation;
  rf.nodes = nodes;
  rf.gamma_a = calibrate_gamma(target_a, truncation, nodes);
  rf.gamma_b = calibrate_gamma(target_b, truncation, nodes);
  return rf;
}

PauliCoeffs ensemble_average(const ScaledExperiment &experiment, const RfInhomogeneity &rf, int parallelism) {
  if (parallelism < 1) {
    throw std::invalid_argument("parallelism must be >= 1");
  }
  const ScaleRule ra = lorentzian_rule(rf.gamma_a, rf.truncation, rf.nodes);
  const ScaleRule rb = lorentzian_rule(rf.gamma_b, rf.truncation, rf.nodes);
  const size_t rows = ra.weights.size();
  std::vector<PauliCoeffs> row_sums(rows);

  auto do_row = [&](size_t i) {
    PauliCoeffs acc;
    for (size_t j = 0; j < rb.weights.size(); ++j) {
      acc += rb.weights[j] * experiment(1.0 + ra.deviations[i], 1.0 + rb.deviations[j]);
    }
    row_sums[i] = ra.weights[i] * acc;
  };

  const size_t workers = std::min(rows, static_cast<size_t>(parallelism));
  if (workers <= 1) {
    for (size_t i = 0; i < rows; ++i) do_row(i);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (size_t i = w; i < rows; i += workers) do_row(i);
      });
    }
    for (std::thread &t : pool) t.join();
  }

  PauliCoeffs total;
  for (const PauliCoeffs &r : row_sums) total += r;
  return total;
}

PauliCoeffs monte_carlo_average(const ScaledExperiment &experiment, const RfInhomogeneity &rf, int samples,
                                std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("sample count must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double edge = std::atan(rf.truncation);
  auto draw = [&](double gamma) { return gamma * std::tan(u(rng) * edge); };
  PauliCoeffs total;
  for (int k = 0; k < samples; ++k) {
    const double da = draw(rf.gamma_a);
    const double db = draw(rf.gamma_b);
    total += experiment(1.0 + da, 1.0 + db);
  }
  return (1.0 / samples) * total;
}

}  // namespace phasecode
