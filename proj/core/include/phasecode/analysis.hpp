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
#include <cstdint>
#include <vector>

namespace phasecode {

/// One output of spin A for input angle theta, in the x-z plane.
struct EllipsePoint {
  double theta = 0.0;
  double z = 0.0;
  double x = 0.0;

  double intensity() const { return z * z + x * x; }
};

struct FitOptions {
  int max_iterations = 200;
  double relative_step = 1e-10;
  /// Replace first-order standard errors by a bootstrap estimate.
  bool bootstrap = false;
  int bootstrap_samples = 200;
  std::uint64_t seed = 1;
};

/// Parameters of I(theta) = (A + B sin^2(theta + D)) (1 - C (theta + D)).
struct EllipseFit {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  std::array<double, 4> std_error{};
  double residual_rms = 0.0;
  int iterations = 0;
  bool d_frozen = false;

  double model(double theta) const;
};

/// Levenberg-Marquardt fit of the intensity model to z^2 + x^2. Needs at least
/// five points on at least three distinct angles (std::invalid_argument
/// otherwise); throws NumericError when the iteration limit is reached.
EllipseFit fit_ellipse(const std::vector<EllipsePoint> &points, const FitOptions &options = {});

/// sqrt(I(0) / I(pi/2)) of the fitted model. Throws NumericError when either
/// value is not positive.
double ellipticity(const EllipseFit &fit);

/// (1 + 1/eps) / 2. Throws std::invalid_argument unless eps > 0.
double fidelity_from_ellipticity(double eps);

/// Minimum over the points of (1 + (sin(theta) x + cos(theta) z) / norm) / 2.
/// Throws std::invalid_argument unless norm > 0.
double overlap_fidelity(const std::vector<EllipsePoint> &points, double normalization);

/// As above with norm = |r(theta = 0)|. Throws std::invalid_argument if the
/// grid has no theta = 0 point.
double overlap_fidelity(const std::vector<EllipsePoint> &points);

/// |r| at the theta = 0 point.
double normalization_amplitude(const std::vector<EllipsePoint> &points);

struct FidelityReport {
  EllipseFit fit;
  double ellipticity = 1.0;
  double F_epsilon = 1.0;
  double F_delta = 1.0;
  double p_epsilon = 0.0;
  double normalization_amplitude = 1.0;
};

FidelityReport analyze_ellipse(const std::vector<EllipsePoint> &points, const FitOptions &options = {});

/// y = c0 + c1 x + c2 x^2 with standard errors.
struct QuadraticFit {
  std::array<double, 3> c{};
  std::array<double, 3> std_error{};
};

/// Weighted linear least squares in the monomial basis. weights may be empty
/// (uniform). Needs at least four points; throws NumericError on a rank
/// deficient design.
QuadraticFit quadratic_fit(const std::vector<double> &x, const std::vector<double> &y,
                           const std::vector<double> &weights = {});

}  // namespace phasecode
