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

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace phasecode {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix. Single-spin operators and reduced states.
using Matrix2 = Eigen::Matrix2cd;

/// Dense 4x4 complex matrix in the basis |00>,|01>,|10>,|11>, spin A on the left.
/// Carries two-spin unitaries and (unnormalized, not necessarily positive)
/// deviation density matrices.
using Matrix4 = Eigen::Matrix4cd;

/// Tolerance for exact algebraic identities.
inline constexpr double kExactTol = 1e-12;
/// Tolerance used when validating caller-supplied inputs.
inline constexpr double kValidationTol = 1e-9;

/// Raised when a numerical routine fails (singular system, no convergence, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

/// sigma_0..sigma_3 = I, sigma_x, sigma_y, sigma_z.
const Matrix2 &pauli(int index);
inline const Matrix2 &pauli(Pauli p) { return pauli(static_cast<int>(p)); }

/// sigma_i (x) sigma_j.
const Matrix4 &pauli_product(int i, int j);

/// Coefficients c_ij of m = sum_ij c_ij sigma_i (x) sigma_j.
class PauliCoeffs {
 public:
  PauliCoeffs() { c_.fill(0.0); }

  double &operator()(int i, int j) { return c_[static_cast<size_t>(4 * i + j)]; }
  double operator()(int i, int j) const { return c_[static_cast<size_t>(4 * i + j)]; }

  const std::array<double, 16> &flat() const { return c_; }
  std::array<double, 16> &flat() { return c_; }

  PauliCoeffs &operator+=(const PauliCoeffs &other);
  PauliCoeffs &operator*=(double s);
  friend PauliCoeffs operator+(PauliCoeffs a, const PauliCoeffs &b) { return a += b; }
  friend PauliCoeffs operator*(double s, PauliCoeffs a) { return a *= s; }

  /// Sum of squared coefficients.
  double squared_norm() const;
  double max_abs_diff(const PauliCoeffs &other) const;

 private:
  std::array<double, 16> c_;
};

/// Bloch-style vector (tr(rho sigma_x), tr(rho sigma_y), tr(rho sigma_z)).
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

bool is_hermitian(const Matrix4 &m, double tol = kValidationTol);
bool is_hermitian(const Matrix2 &m, double tol = kValidationTol);
bool is_unitary(const Matrix4 &u, double tol = kValidationTol);

/// Max-abs entry of the anti-Hermitian part (m - m^dagger)/2.
double anti_hermitian_defect(const Matrix4 &m);

/// c_ij = Re tr(m (sigma_i (x) sigma_j)) / 4. Throws std::invalid_argument if
/// the anti-Hermitian part of m exceeds kValidationTol.
PauliCoeffs pauli_decompose(const Matrix4 &m);

Matrix4 reconstruct(const PauliCoeffs &c);

/// Kronecker product a (x) b with a acting on spin A (row-major blocks).
Matrix4 tensor(const Matrix2 &a, const Matrix2 &b);

/// u rho u^dagger. Throws std::invalid_argument if u is not unitary.
Matrix4 conjugate(const Matrix4 &u, const Matrix4 &rho);

/// 2x2 block of spin A conditioned on spin B = |outcome>, i.e. <outcome|_B rho |outcome>_B.
Matrix2 project_ancilla(const Matrix4 &rho, int outcome);

/// tr_B rho.
Matrix2 partial_trace_b(const Matrix4 &rho);

/// (tr(rho sigma_x), tr(rho sigma_y), tr(rho sigma_z)); no 1/2 normalization,
/// so sigma_x maps to (2, 0, 0).
BlochVector bloch_of(const Matrix2 &rho);

/// |tr(u^dagger v)| / 4; equals 1 iff u and v agree up to a global phase.
double phase_insensitive_overlap(const Matrix4 &u, const Matrix4 &v);

double max_abs_diff(const Matrix4 &a, const Matrix4 &b);
double max_abs_diff(const Matrix2 &a, const Matrix2 &b);

/// Outer-product ket/bra helpers for the computational basis of one spin.
Matrix2 projector(int bit);

}  // namespace phasecode
