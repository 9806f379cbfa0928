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

#include "phasecode/tomography.hpp"

#include <stdexcept>
#include <string>

#include "phasecode/experiment.hpp"

namespace phasecode {

namespace {

Readings readings_of(const PauliCoeffs &acquired) {
  const PeakIntegrals p = peak_integrals(acquired);
  return {p.a_high.real(), p.a_high.imag(), p.a_low.real(), p.a_low.imag(),
          p.b_high.real(), p.b_high.imag(), p.b_low.real(), p.b_low.imag()};
}

std::vector<Readings> readings_for(const Matrix4 &rho, RfScales scales) {
  std::vector<Readings> out;
  for (const PulseSequence &seq : tomography_readouts()) {
    const Matrix4 u = compile(seq, kDefaultJHz, scales);
    const Matrix4 acquired = u * rho * u.adjoint();
    out.push_back(readings_of(pauli_decompose(acquired)));
  }
  return out;
}

// Columns: the response of every reading to a unit c_ij, (i, j) != (0, 0).
const Eigen::MatrixXd &design_matrix() {
  static const Eigen::MatrixXd m = [] {
    const int rows = 8 * static_cast<int>(tomography_readouts().size());
    Eigen::MatrixXd a(rows, 15);
    for (int col = 0; col < 15; ++col) {
      const int i = (col + 1) / 4;
      const int j = (col + 1) % 4;
      const std::vector<Readings> r = readings_for(pauli_product(i, j), {});
      for (size_t s = 0; s < r.size(); ++s) {
        for (int k = 0; k < 8; ++k) {
          a(static_cast<int>(8 * s) + k, col) = r[s][static_cast<size_t>(k)];
        }
      }
    }
    return a;
  }();
  return m;
}

}  // namespace

const std::vector<PulseSequence> &tomography_readouts() {
  static const std::vector<PulseSequence> seqs = [] {
    std::vector<PulseSequence> out;
    const char *names_a[] = {"I", "X_a", "Y_a"};
    const char *names_b[] = {"I", "X_b", "Y_b"};
    for (const char *na : names_a) {
      for (const char *nb : names_b) {
        PulseSequence s;
        s.name = std::string(na) + "," + nb;
        if (std::string(na) != "I") s.then(gate_library(na));
        if (std::string(nb) != "I") s.then(gate_library(nb));
        out.push_back(s);
      }
    }
    return out;
  }();
  return seqs;
}

std::vector<Readings> simulate_readings(const Matrix4 &rho, RfScales scales) { return readings_for(rho, scales); }

PauliCoeffs reconstruct_from_readings(const std::vector<Readings> &readings) {
  const Eigen::MatrixXd &a = design_matrix();
  if (8 * static_cast<long>(readings.size()) != a.rows()) {
    throw std::invalid_argument("expected one set of readings per tomography setting");
  }
  Eigen::VectorXd b(a.rows());
  for (size_t s = 0; s < readings.size(); ++s) {
    for (int k = 0; k < 8; ++k) {
      b(static_cast<int>(8 * s) + k) = readings[s][static_cast<size_t>(k)];
    }
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < 15) {
    throw NumericError("tomography system is rank deficient");
  }
  const Eigen::VectorXd x = qr.solve(b);
  PauliCoeffs c;
  for (int col = 0; col < 15; ++col) {
    c((col + 1) / 4, (col + 1) % 4) = x(col);
  }
  return c;
}

PauliCoeffs tomography(const Matrix4 &rho) { return reconstruct_from_readings(simulate_readings(rho)); }

}  // namespace phasecode
