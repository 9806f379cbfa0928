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

#include "phasecode/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

#include "phasecode/qcore.hpp"

namespace phasecode {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kFreezeRatio = 1e-6;
constexpr double kMaxLambda = 1e16;

using Vec4 = Eigen::Vector4d;

double model_at(const Vec4 &p, double theta) {
  const double u = theta + p(3);
  const double s = std::sin(u);
  return (p(0) + p(1) * s * s) * (1.0 - p(2) * u);
}

// Row of the Jacobian of the model with respect to (A, B, C, D).
Vec4 gradient_at(const Vec4 &p, double theta) {
  const double u = theta + p(3);
  const double s = std::sin(u);
  const double damp = 1.0 - p(2) * u;
  const double base = p(0) + p(1) * s * s;
  Vec4 g;
  g << damp, s * s * damp, -u * base, 2.0 * p(1) * s * std::cos(u) * damp - p(2) * base;
  return g;
}

double cost(const Vec4 &p, const std::vector<EllipsePoint> &pts) {
  double c = 0.0;
  for (const EllipsePoint &q : pts) {
    const double r = model_at(p, q.theta) - q.intensity();
    c += r * r;
  }
  return c;
}

const EllipsePoint &closest(const std::vector<EllipsePoint> &pts, double theta) {
  return *std::min_element(pts.begin(), pts.end(), [&](const EllipsePoint &a, const EllipsePoint &b) {
    return std::abs(a.theta - theta) < std::abs(b.theta - theta);
  });
}

struct LmResult {
  Vec4 p;
  Eigen::Matrix4d jtj;
  int iterations = 0;
};

LmResult levenberg_marquardt(Vec4 p, const std::vector<EllipsePoint> &pts, bool freeze_d, const FitOptions &opt) {
  const int active = freeze_d ? 3 : 4;
  double lambda = 1e-3;
  double current = cost(p, pts);
  LmResult res;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    Eigen::Matrix4d jtj = Eigen::Matrix4d::Zero();
    Vec4 jtr = Vec4::Zero();
    for (const EllipsePoint &q : pts) {
      const Vec4 g = gradient_at(p, q.theta);
      const double r = model_at(p, q.theta) - q.intensity();
      jtj += g * g.transpose();
      jtr += g * r;
    }
    res.jtj = jtj;
    res.iterations = it;
    const Eigen::MatrixXd h = jtj.topLeftCorner(active, active);
    const Eigen::VectorXd rhs = -jtr.head(active);

    bool accepted = false;
    Eigen::VectorXd step;
    while (lambda < kMaxLambda) {
      Eigen::MatrixXd damped = h;
      for (int k = 0; k < active; ++k) {
        damped(k, k) += lambda * std::max(h(k, k), 1e-12);
      }
      step = damped.ldlt().solve(rhs);
      Vec4 trial = p;
      trial.head(active) += step;
      const double c = cost(trial, pts);
      if (std::isfinite(c) && c <= current) {
        p = trial;
        current = c;
        lambda = std::max(lambda / 10.0, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!accepted) {
      // No descent direction left: already at the minimum.
      res.p = p;
      return res;
    }
    if (step.norm() <= opt.relative_step * (p.head(active).norm() + opt.relative_step)) {
      res.p = p;
      return res;
    }
  }
  throw NumericError("fit_ellipse: Levenberg-Marquardt did not converge");
}

EllipseFit fit_once(const std::vector<EllipsePoint> &pts, const FitOptions &opt) {
  Vec4 p;
  const double a0 = closest(pts, 0.0).intensity();
  const double b0 = closest(pts, kHalfPi).intensity() - a0;
  p << a0, b0, 0.0, 0.0;
  bool freeze = std::abs(b0) < kFreezeRatio * std::abs(a0);
  LmResult res = levenberg_marquardt(p, pts, freeze, opt);
  if (!freeze && std::abs(res.p(1)) < kFreezeRatio * std::abs(res.p(0))) {
    freeze = true;
    p(3) = 0.0;
    res = levenberg_marquardt(p, pts, freeze, opt);
  }

  EllipseFit fit;
  fit.A = res.p(0);
  fit.B = res.p(1);
  fit.C = res.p(2);
  fit.D = res.p(3);
  fit.d_frozen = freeze;
  fit.iterations = res.iterations;
  const double ssr = cost(res.p, pts);
  const auto n = static_cast<double>(pts.size());
  fit.residual_rms = std::sqrt(ssr / n);

  const int active = freeze ? 3 : 4;
  const double dof = n - active;
  const Eigen::MatrixXd h = res.jtj.topLeftCorner(active, active);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(h);
  if (dof > 0 && lu.isInvertible()) {
    const Eigen::MatrixXd cov = lu.inverse() * (ssr / dof);
    for (int k = 0; k < active; ++k) {
      fit.std_error[static_cast<size_t>(k)] = std::sqrt(std::max(cov(k, k), 0.0));
    }
  }
  return fit;
}

}  // namespace

double EllipseFit::model(double theta) const {
  Vec4 p;
  p << A, B, C, D;
  return model_at(p, theta);
}

EllipseFit fit_ellipse(const std::vector<EllipsePoint> &points, const FitOptions &options) {
  if (points.size() < 5) {
    throw std::invalid_argument("fit_ellipse needs at least 5 points");
  }
  std::set<double> distinct;
  for (const EllipsePoint &q : points) {
    if (!std::isfinite(q.theta) || !std::isfinite(q.z) || !std::isfinite(q.x)) {
      throw std::invalid_argument("fit_ellipse: non-finite input");
    }
    distinct.insert(q.theta);
  }
  if (distinct.size() < 3) {
    throw std::invalid_argument("fit_ellipse: degenerate angle grid");
  }
  EllipseFit fit = fit_once(points, options);
  if (options.bootstrap && options.bootstrap_samples > 1) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<size_t> pick(0, points.size() - 1);
    std::array<double, 4> sum{};
    std::array<double, 4> sum_sq{};
    int used = 0;
    for (int b = 0; b < options.bootstrap_samples; ++b) {
      std::vector<EllipsePoint> sample;
      std::set<double> angles;
      for (size_t k = 0; k < points.size(); ++k) {
        sample.push_back(points[pick(rng)]);
        angles.insert(sample.back().theta);
      }
      if (angles.size() < 3) continue;
      EllipseFit f;
      try {
        f = fit_once(sample, options);
      } catch (const NumericError &) {
        continue;
      }
      const std::array<double, 4> v = {f.A, f.B, f.C, f.D};
      for (size_t k = 0; k < 4; ++k) {
        sum[k] += v[k];
        sum_sq[k] += v[k] * v[k];
      }
      ++used;
    }
    if (used > 1) {
      for (size_t k = 0; k < 4; ++k) {
        const double mean = sum[k] / used;
        fit.std_error[k] = std::sqrt(std::max(sum_sq[k] / used - mean * mean, 0.0) * used / (used - 1));
      }
    }
  }
  return fit;
}

double ellipticity(const EllipseFit &fit) {
  const double i0 = fit.model(0.0);
  const double i90 = fit.model(kHalfPi);
  if (!(i0 > 0.0) || !(i90 > 0.0)) {
    throw NumericError("ellipticity: fitted intensity is not positive");
  }
  return std::sqrt(i0 / i90);
}

double fidelity_from_ellipticity(double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("ellipticity must be > 0");
  }
  return 0.5 * (1.0 + 1.0 / eps);
}

double normalization_amplitude(const std::vector<EllipsePoint> &points) {
  for (const EllipsePoint &q : points) {
    if (std::abs(q.theta) <= kExactTol) {
      return std::sqrt(q.intensity());
    }
  }
  throw std::invalid_argument("overlap_fidelity: no theta = 0 point");
}

double overlap_fidelity(const std::vector<EllipsePoint> &points, double normalization) {
  if (!(normalization > 0.0)) {
    throw std::invalid_argument("overlap_fidelity: normalization must be > 0");
  }
  if (points.empty()) {
    throw std::invalid_argument("overlap_fidelity: no points");
  }
  double f = 1.0;
  bool first = true;
  for (const EllipsePoint &q : points) {
    const double v = 0.5 * (1.0 + (std::sin(q.theta) * q.x + std::cos(q.theta) * q.z) / normalization);
    f = first ? v : std::min(f, v);
    first = false;
  }
  return f;
}

double overlap_fidelity(const std::vector<EllipsePoint> &points) {
  return overlap_fidelity(points, normalization_amplitude(points));
}

FidelityReport analyze_ellipse(const std::vector<EllipsePoint> &points, const FitOptions &options) {
  FidelityReport r;
  r.fit = fit_ellipse(points, options);
  r.ellipticity = ellipticity(r.fit);
  r.F_epsilon = fidelity_from_ellipticity(r.ellipticity);
  r.p_epsilon = 1.0 - r.F_epsilon;
  r.normalization_amplitude = normalization_amplitude(points);
  r.F_delta = overlap_fidelity(points, r.normalization_amplitude);
  return r;
}

QuadraticFit quadratic_fit(const std::vector<double> &x, const std::vector<double> &y,
                           const std::vector<double> &weights) {
  if (x.size() != y.size() || (!weights.empty() && weights.size() != x.size())) {
    throw std::invalid_argument("quadratic_fit: size mismatch");
  }
  if (x.size() < 4) {
    throw std::invalid_argument("quadratic_fit needs at least 4 points");
  }
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto i = static_cast<size_t>(k);
    if (!weights.empty()) {
      if (!(weights[i] > 0.0)) throw std::invalid_argument("quadratic_fit: weights must be > 0");
      w(k) = weights[i];
    }
    a(k, 0) = 1.0;
    a(k, 1) = x[i];
    a(k, 2) = x[i] * x[i];
    b(k) = y[i];
  }
  const Eigen::VectorXd sw = w.cwiseSqrt();
  const Eigen::MatrixXd aw = sw.asDiagonal() * a;
  const Eigen::VectorXd bw = sw.asDiagonal() * b;
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(aw);
  if (qr.rank() < 3) {
    throw NumericError("quadratic_fit: rank-deficient design");
  }
  const Eigen::Vector3d c = qr.solve(bw);
  const double ssr = (aw * c - bw).squaredNorm();
  const Eigen::Matrix3d cov = (aw.transpose() * aw).inverse() * (ssr / static_cast<double>(n - 3));
  QuadraticFit fit;
  for (int k = 0; k < 3; ++k) {
    fit.c[static_cast<size_t>(k)] = c(k);
    fit.std_error[static_cast<size_t>(k)] = std::sqrt(std::max(cov(k, k), 0.0));
  }
  return fit;
}

}  // namespace phasecode
