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

#include "phasecode/qcore.hpp"

#include <algorithm>
#include <cmath>

namespace phasecode {

namespace {

std::array<Matrix2, 4> make_paulis() {
  const Complex i{0.0, 1.0};
  std::array<Matrix2, 4> p;
  p[0] << 1, 0, 0, 1;
  p[1] << 0, 1, 1, 0;
  p[2] << 0, -i, i, 0;
  p[3] << 1, 0, 0, -1;
  return p;
}

std::array<Matrix4, 16> make_products() {
  std::array<Matrix4, 16> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out[static_cast<size_t>(4 * i + j)] = tensor(pauli(i), pauli(j));
    }
  }
  return out;
}

}  // namespace

const Matrix2 &pauli(int index) {
  static const std::array<Matrix2, 4> table = make_paulis();
  if (index < 0 || index > 3) {
    throw std::out_of_range("pauli index must be in 0..3");
  }
  return table[static_cast<size_t>(index)];
}

const Matrix4 &pauli_product(int i, int j) {
  static const std::array<Matrix4, 16> table = make_products();
  if (i < 0 || i > 3 || j < 0 || j > 3) {
    throw std::out_of_range("pauli index must be in 0..3");
  }
  return table[static_cast<size_t>(4 * i + j)];
}

PauliCoeffs &PauliCoeffs::operator+=(const PauliCoeffs &other) {
  for (size_t k = 0; k < c_.size(); ++k) {
    c_[k] += other.c_[k];
  }
  return *this;
}

PauliCoeffs &PauliCoeffs::operator*=(double s) {
  for (double &v : c_) {
    v *= s;
  }
  return *this;
}

double PauliCoeffs::squared_norm() const {
  double s = 0.0;
  for (double v : c_) {
    s += v * v;
  }
  return s;
}

double PauliCoeffs::max_abs_diff(const PauliCoeffs &other) const {
  double d = 0.0;
  for (size_t k = 0; k < c_.size(); ++k) {
    d = std::max(d, std::abs(c_[k] - other.c_[k]));
  }
  return d;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool is_hermitian(const Matrix4 &m, double tol) { return anti_hermitian_defect(m) <= tol; }

bool is_hermitian(const Matrix2 &m, double tol) {
  return ((m - m.adjoint()) * 0.5).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix4 &u, double tol) {
  return (u * u.adjoint() - Matrix4::Identity()).cwiseAbs().maxCoeff() <= tol;
}

double anti_hermitian_defect(const Matrix4 &m) {
  return ((m - m.adjoint()) * 0.5).cwiseAbs().maxCoeff();
}

PauliCoeffs pauli_decompose(const Matrix4 &m) {
  if (anti_hermitian_defect(m) > kValidationTol) {
    throw std::invalid_argument("pauli_decompose: input matrix is not Hermitian");
  }
  PauliCoeffs c;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      // tr(m P) without forming the product: sum_kl m_kl P_lk.
      const Matrix4 &p = pauli_product(i, j);
      c(i, j) = (m.cwiseProduct(p.transpose())).sum().real() / 4.0;
    }
  }
  return c;
}

Matrix4 reconstruct(const PauliCoeffs &c) {
  Matrix4 m = Matrix4::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (c(i, j) != 0.0) {
        m += c(i, j) * pauli_product(i, j);
      }
    }
  }
  return m;
}

Matrix4 tensor(const Matrix2 &a, const Matrix2 &b) {
  Matrix4 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    }
  }
  return out;
}

Matrix4 conjugate(const Matrix4 &u, const Matrix4 &rho) {
  if (!is_unitary(u)) {
    throw std::invalid_argument("conjugate: operator is not unitary");
  }
  return u * rho * u.adjoint();
}

Matrix2 project_ancilla(const Matrix4 &rho, int outcome) {
  if (outcome != 0 && outcome != 1) {
    throw std::invalid_argument("project_ancilla: outcome must be 0 or 1");
  }
  Matrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out(r, c) = rho(2 * r + outcome, 2 * c + outcome);
    }
  }
  return out;
}

Matrix2 partial_trace_b(const Matrix4 &rho) {
  return project_ancilla(rho, 0) + project_ancilla(rho, 1);
}

BlochVector bloch_of(const Matrix2 &rho) {
  return {(rho * pauli(1)).trace().real(), (rho * pauli(2)).trace().real(),
          (rho * pauli(3)).trace().real()};
}

double phase_insensitive_overlap(const Matrix4 &u, const Matrix4 &v) {
  return std::abs((u.adjoint() * v).trace()) / 4.0;
}

double max_abs_diff(const Matrix4 &a, const Matrix4 &b) { return (a - b).cwiseAbs().maxCoeff(); }

double max_abs_diff(const Matrix2 &a, const Matrix2 &b) { return (a - b).cwiseAbs().maxCoeff(); }

Matrix2 projector(int bit) {
  Matrix2 p = Matrix2::Zero();
  p(bit, bit) = 1.0;
  return p;
}

}  // namespace phasecode
