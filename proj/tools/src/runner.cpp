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

#include "phasecode_cli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

namespace phasecode::cli {

namespace {

struct Job {
  size_t variant;
  Mode mode;
  double t_d;
  double theta;
};

std::string describe(const Job &job, const std::vector<Variant> &variants) {
  return variants[job.variant].name + "/" + std::string(to_string(job.mode)) + " t_d=" + format_double(job.t_d) +
         " theta=" + format_double(job.theta);
}

std::vector<std::string> split(const std::string &line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::vector<std::vector<std::string>> rows_of(const std::string &text, size_t columns) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f = split(line);
    if (f.size() != columns) throw std::invalid_argument("malformed CSV row: " + line);
    out.push_back(std::move(f));
  }
  return out;
}

// Delta-method variance of the ellipticity from the fitted A, B errors.
double ellipticity_variance(const FitRow &row) {
  const EllipseFit &f = row.report.fit;
  const double i0 = f.model(0.0);
  const double i90 = f.model(kPi / 2);
  const double v0 = f.std_error[0] * f.std_error[0];
  const double v90 = v0 + f.std_error[1] * f.std_error[1];
  const double eps = row.report.ellipticity;
  return 0.25 * eps * eps * (v0 / (i0 * i0) + v90 / (i90 * i90));
}

void add_trend(SweepResult &out, const std::string &variant, const std::string &series, const std::string &quantity,
               const std::vector<double> &x, const std::vector<double> &y, const std::vector<double> &w) {
  if (x.size() < 4) return;
  TrendRow row;
  row.variant = variant;
  row.series = series;
  row.quantity = quantity;
  row.fit = quadratic_fit(x, y, w);
  out.trends.push_back(row);
}

}  // namespace

std::vector<Variant> variants_of(const RunConfig &config) {
  std::vector<Variant> out;
  Variant ideal{"ideal", config.settings};
  ideal.settings.noise.rf_inhomogeneity = false;
  ideal.settings.noise.amplitude_relaxation = false;
  out.push_back(ideal);
  const NoiseConfig &n = config.settings.noise;
  if (n.rf_inhomogeneity || n.amplitude_relaxation) {
    out.push_back({"simulated", config.settings});
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SweepResult run_sweep(const RunConfig &config, int parallelism) {
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  const std::vector<Variant> variants = variants_of(config);
  std::vector<RfInhomogeneity> rfs;
  for (const Variant &v : variants) rfs.push_back(v.settings.noise.rf());

  std::vector<Mode> modes = config.modes;
  std::sort(modes.begin(), modes.end(), [](Mode a, Mode b) { return to_string(a) < to_string(b); });
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
  std::vector<double> times = config.storage_times;
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<double> thetas = config.thetas;
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());

  std::vector<Job> jobs;
  for (size_t v = 0; v < variants.size(); ++v)
    for (Mode m : modes)
      for (double t : times)
        for (double th : thetas) jobs.push_back({v, m, t, th});

  std::vector<TrialRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < jobs.size(); k = next++) {
      const Job &job = jobs[k];
      try {
        const TrialSettings &s = variants[job.variant].settings;
        TrialRow row;
        row.variant = variants[job.variant].name;
        row.record = simulate_trial(job.theta, job.t_d, job.mode, s, rfs[job.variant], 1);
        const DampingParams p = s.noise.damping(job.t_d);
        row.p_a = p.p_a;
        row.p_b = p.p_b;
        rows[k] = row;
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const size_t workers = std::min(jobs.size(), static_cast<size_t>(parallelism));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();
  }
  for (size_t k = 0; k < jobs.size(); ++k) {
    if (!errors[k]) continue;
    try {
      std::rethrow_exception(errors[k]);
    } catch (const std::exception &e) {
      throw NumericError("trial " + describe(jobs[k], variants) + ": " + e.what());
    }
  }

  SweepResult out;
  out.trials = rows;

  // One ellipse per (variant, mode, t_d); jobs are already grouped that way.
  for (size_t start = 0; start < jobs.size(); start += thetas.size()) {
    std::vector<EllipsePoint> pts;
    for (size_t k = start; k < start + thetas.size(); ++k) {
      const BlochVector &a = rows[k].record.output.accepted;
      pts.push_back({rows[k].record.theta, a.z, a.x});
    }
    FitRow fit;
    fit.variant = rows[start].variant;
    fit.mode = jobs[start].mode;
    fit.t_d = jobs[start].t_d;
    try {
      fit.report = analyze_ellipse(pts, config.fit);
    } catch (const std::exception &e) {
      throw NumericError("ellipse fit " + fit.variant + "/" + std::string(to_string(fit.mode)) +
                         " t_d=" + format_double(fit.t_d) + ": " + e.what());
    }
    out.fits.push_back(fit);
  }

  for (const Variant &v : variants) {
    std::map<double, const FitRow *> coded;
    std::map<double, const FitRow *> control;
    for (Mode m : modes) {
      std::vector<double> x, y, w;
      bool weighted = config.trend_weights == "inverse_variance";
      for (const FitRow &f : out.fits) {
        if (f.variant != v.name || f.mode != m) continue;
        x.push_back(f.t_d);
        y.push_back(f.report.ellipticity);
        const double var = ellipticity_variance(f);
        if (!(var > 0.0) || !std::isfinite(var)) weighted = false;
        w.push_back(weighted ? 1.0 / var : 1.0);
        (m == Mode::Coded ? coded : control)[f.t_d] = &f;
      }
      if (!weighted) w.clear();
      add_trend(out, v.name, std::string(to_string(m)), "eps", x, y, w);
    }
    std::vector<double> x, y;
    for (const auto &[t, f] : control) {
      auto it = coded.find(t);
      if (it == coded.end()) continue;
      x.push_back(f->report.p_epsilon);
      y.push_back(it->second->report.p_epsilon);
    }
    add_trend(out, v.name, "p_coded_vs_p_control", "p_eps", x, y, {});
  }
  return out;
}

std::string trials_csv(const SweepResult &r) {
  std::string s = "variant,mode,theta,t_d,p_a,p_b,accepted_z,accepted_x,rejected_z,rejected_x,acceptance_weight\n";
  for (const TrialRow &row : r.trials) {
    const TrialRecord &t = row.record;
    s += row.variant + "," + std::string(to_string(t.mode)) + "," + format_double(t.theta) + "," +
         format_double(t.t_d) + "," + format_double(row.p_a) + "," + format_double(row.p_b) + "," +
         format_double(t.output.accepted.z) + "," + format_double(t.output.accepted.x) + "," +
         format_double(t.output.rejected.z) + "," + format_double(t.output.rejected.x) + "," +
         format_double(t.acceptance_weight) + "\n";
  }
  return s;
}

std::string fits_csv(const SweepResult &r) {
  std::string s = "variant,mode,t_d,A,B,C,D,se_A,se_B,se_C,se_D,residual_rms,eps,F_eps,F_delta,p_eps,normalization\n";
  for (const FitRow &row : r.fits) {
    const FidelityReport &f = row.report;
    s += row.variant + "," + std::string(to_string(row.mode)) + "," + format_double(row.t_d);
    for (double v : {f.fit.A, f.fit.B, f.fit.C, f.fit.D, f.fit.std_error[0], f.fit.std_error[1], f.fit.std_error[2],
                     f.fit.std_error[3], f.fit.residual_rms, f.ellipticity, f.F_epsilon, f.F_delta, f.p_epsilon,
                     f.normalization_amplitude}) {
      s += "," + format_double(v);
    }
    s += "\n";
  }
  return s;
}

std::string trends_csv(const SweepResult &r) {
  std::string s = "variant,series,quantity,c0,c1,c2,se_c0,se_c1,se_c2\n";
  for (const TrendRow &row : r.trends) {
    s += row.variant + "," + row.series + "," + row.quantity;
    for (double v : row.fit.c) s += "," + format_double(v);
    for (double v : row.fit.std_error) s += "," + format_double(v);
    s += "\n";
  }
  return s;
}

std::vector<TrialRow> parse_trials_csv(const std::string &text) {
  std::vector<TrialRow> out;
  for (const auto &f : rows_of(text, 11)) {
    TrialRow row;
    row.variant = f[0];
    row.record.mode = parse_mode(f[1]);
    row.record.theta = std::stod(f[2]);
    row.record.t_d = std::stod(f[3]);
    row.p_a = std::stod(f[4]);
    row.p_b = std::stod(f[5]);
    row.record.output.accepted = {std::stod(f[7]), 0.0, std::stod(f[6])};
    row.record.output.rejected = {std::stod(f[9]), 0.0, std::stod(f[8])};
    row.record.acceptance_weight = std::stod(f[10]);
    out.push_back(row);
  }
  return out;
}

std::vector<FitRow> parse_fits_csv(const std::string &text) {
  std::vector<FitRow> out;
  for (const auto &f : rows_of(text, 17)) {
    FitRow row;
    row.variant = f[0];
    row.mode = parse_mode(f[1]);
    row.t_d = std::stod(f[2]);
    EllipseFit &e = row.report.fit;
    e.A = std::stod(f[3]);
    e.B = std::stod(f[4]);
    e.C = std::stod(f[5]);
    e.D = std::stod(f[6]);
    for (size_t k = 0; k < 4; ++k) e.std_error[k] = std::stod(f[7 + k]);
    e.residual_rms = std::stod(f[11]);
    row.report.ellipticity = std::stod(f[12]);
    row.report.F_epsilon = std::stod(f[13]);
    row.report.F_delta = std::stod(f[14]);
    row.report.p_epsilon = std::stod(f[15]);
    row.report.normalization_amplitude = std::stod(f[16]);
    out.push_back(row);
  }
  return out;
}

}  // namespace phasecode::cli
