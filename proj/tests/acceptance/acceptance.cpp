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

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phasecode/analysis.hpp"
#include "phasecode/channels.hpp"
#include "phasecode/experiment.hpp"
#include "phasecode/tomography.hpp"
#include "phasecode/tradeoff.hpp"
#include "phasecode_cli/commands.hpp"

namespace {

using namespace phasecode;
using namespace phasecode::cli;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string summary;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void detail(const std::string &line) { std::cout << "  " << line << "\n"; }

double t2_for(double p, double t_d) {
  if (p <= 0.0) return std::numeric_limits<double>::infinity();
  return t_d / -std::log1p(-2.0 * p);
}

Matrix4 coded_output(double theta, double pa, double pb) {
  const Matrix2 &I = pauli(0), &X = pauli(1), &Z = pauli(3);
  const double c = std::cos(theta), s = std::sin(theta);
  const Matrix2 acc = c * (1 - pa - pb + 2 * pa * pb) * Z + s * (1 - pa - pb) * X;
  const Matrix2 rej = c * (pa + pb - 2 * pa * pb) * Z + s * (pb - pa) * X;
  return tensor(acc, 0.5 * (I + Z)) + tensor(rej, 0.5 * (I - Z));
}

Matrix4 control_output(double theta, double pa) {
  const Matrix2 &I = pauli(0), &X = pauli(1), &Z = pauli(3);
  return tensor(std::cos(theta) * Z + (1 - 2 * pa) * std::sin(theta) * X, 0.5 * (I + Z));
}

TrialSettings ideal_settings(double t2a, double t2b) {
  TrialSettings s;
  s.noise.t2_star_a = t2a;
  s.noise.t2_star_b = t2b;
  return s;
}

std::vector<EllipsePoint> sweep_points(Mode mode, double t_d, const TrialSettings &s, const RfInhomogeneity &rf) {
  std::vector<EllipsePoint> pts;
  for (double th : default_theta_grid()) {
    const TrialRecord r = simulate_trial(th, t_d, mode, s, rf, 1);
    pts.push_back({th, r.output.accepted.z, r.output.accepted.x});
  }
  return pts;
}

std::vector<EllipsePoint> sweep_points(Mode mode, double t_d, const TrialSettings &s) {
  return sweep_points(mode, t_d, s, RfInhomogeneity::homogeneous());
}

const FitRow &find_fit(const SweepResult &r, const std::string &variant, Mode mode, double t_d) {
  for (const FitRow &f : r.fits) {
    if (f.variant == variant && f.mode == mode && f.t_d == t_d) return f;
  }
  throw std::runtime_error("missing fit row");
}

RunConfig bundled(const std::string &name) {
  return load_config(std::string(PHASECODE_CONFIG_DIR) + "/" + name + ".json");
}

// 1. Closed-form oracle equivalence.
Outcome criterion1() {
  const std::vector<double> ps = {0, 0.071, 0.133, 0.185, 0.230, 0.269};
  const double t_d = 0.1;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double pa : ps)
    for (double pb : ps) {
      const TrialSettings s = ideal_settings(t2_for(pa, t_d), t2_for(pb, t_d));
      for (int n = 0; n <= 10; ++n) {
        const double theta = n * kPi / 10;
        worst = std::max(worst, max_abs_diff(run_trial(theta, t_d, Mode::Coded, s), coded_output(theta, pa, pb)));
        worst = std::max(worst, max_abs_diff(run_trial(theta, t_d, Mode::Control, s), control_output(theta, pa)));
      }
    }
  const double elapsed = seconds_since(t0);
  detail("max entrywise deviation " + fmt("%.3e", worst) + ", runtime " + fmt("%.3f", elapsed) + " s");
  return {worst <= 1e-10 && elapsed < 1.0,
          "closed-form rho5 max error " + fmt("%.2e", worst) + " (tol 1e-10), " + fmt("%.3f", elapsed) + " s (< 1 s)"};
}

// 2. Probability ladder at T2* = 0.40 s, t_d = n * 61.5 ms.
Outcome criterion2() {
  const std::vector<double> expected = {0, 0.071, 0.133, 0.185, 0.230, 0.269};
  NoiseConfig n;
  n.t2_star_a = 0.40;
  n.t2_star_b = 0.40;
  double worst = 0.0;
  std::string list;
  for (size_t k = 0; k < expected.size(); ++k) {
    const double pa = n.damping(0.0615 * static_cast<double>(k)).p_a;
    worst = std::max(worst, std::abs(pa - expected[k]));
    list += fmt(" %.4f", pa);
  }
  detail("p_a:" + list);
  return {worst <= 0.002, "p_a ladder max deviation " + fmt("%.4f", worst) + " (tol 0.002)"};
}

// 3. Ellipticity laws.
Outcome criterion3() {
  const double t2a = 0.35, t2b = 0.50;
  const TrialSettings s = ideal_settings(t2a, t2b);
  double worst_control = 0.0, worst_coded = 0.0;
  for (double t : default_storage_times()) {
    const double ec = analyze_ellipse(sweep_points(Mode::Control, t, s)).ellipticity;
    worst_control = std::max(worst_control, std::abs(ec - std::exp(t / t2a)));
    const DampingParams p = s.noise.damping(t);
    const double ratio = (1 - p.p_a - p.p_b + 2 * p.p_a * p.p_b) / (1 - p.p_a - p.p_b);
    const double ek = analyze_ellipse(sweep_points(Mode::Coded, t, s)).ellipticity;
    worst_coded = std::max(worst_coded, std::abs(ek - ratio));
    detail("t_d " + fmt("%.4f", t) + ": control " + fmt("%.12f", ec) + " coded " + fmt("%.12f", ek));
  }
  return {worst_control <= 1e-9 && worst_coded <= 1e-9,
          "control vs exp(t/T2*) " + fmt("%.2e", worst_control) + ", coded vs ratio " + fmt("%.2e", worst_coded) +
              " (tol 1e-9)"};
}

// 4. Ideal coded quadratic trend.
Outcome criterion4() {
  const TrialSettings s = ideal_settings(0.35, 0.50);
  std::vector<double> t, eps;
  for (double td : default_storage_times()) {
    t.push_back(td);
    eps.push_back(analyze_ellipse(sweep_points(Mode::Coded, td, s)).ellipticity);
  }
  const QuadraticFit f = quadratic_fit(t, eps);
  const double d0 = std::abs(f.c[0] - 1.00), d1 = std::abs(f.c[1] - 0.15), d2 = std::abs(f.c[2] - 2.50);
  detail("fit " + fmt("%.4f", f.c[0]) + " + " + fmt("%.4f", f.c[1]) + " t + " + fmt("%.4f", f.c[2]) + " t^2");
  return {d0 <= 0.01 && d1 <= 0.05 && d2 <= 0.15,
          "coded trend (" + fmt("%.4f", f.c[0]) + ", " + fmt("%.4f", f.c[1]) + ", " + fmt("%.4f", f.c[2]) +
              ") vs (1.00, 0.15, 2.50); |dc| = " + fmt("%.4f", d0) + "/" + fmt("%.4f", d1) + "/" + fmt("%.4f", d2) +
              " (tol 0.01/0.05/0.15)"};
}

// 5. Second-order error suppression.
Outcome criterion5() {
  const TrialSettings s = ideal_settings(0.40, 0.40);
  std::vector<double> p_control, p_coded;
  for (double td : default_storage_times()) {
    p_control.push_back(analyze_ellipse(sweep_points(Mode::Control, td, s)).p_epsilon);
    p_coded.push_back(analyze_ellipse(sweep_points(Mode::Coded, td, s)).p_epsilon);
    detail("p_control " + fmt("%.4f", p_control.back()) + " p_coded " + fmt("%.5f", p_coded.back()));
  }
  const QuadraticFit f = quadratic_fit(p_control, p_coded);
  return {std::abs(f.c[1]) < 0.02 && f.c[2] >= 0.9 && f.c[2] <= 1.1,
          "p_coded = " + fmt("%.4f", f.c[0]) + " + " + fmt("%.4f", f.c[1]) + " p + " + fmt("%.4f", f.c[2]) +
              " p^2 (need |c1| < 0.02, c2 in [0.9, 1.1])"};
}

// 6. Conditional fidelity.
Outcome criterion6() {
  const TrialSettings s = ideal_settings(0.40, 0.40);
  double worst = 0.0;
  for (double td : default_storage_times()) {
    const DampingParams p = s.noise.damping(td);
    if (p.p_a > 0.27 || p.p_b > 0.27) continue;
    const double fd = analyze_ellipse(sweep_points(Mode::Coded, td, s)).F_delta;
    const double bound = 1 - p.p_a * p.p_b;
    worst = std::max(worst, std::abs(fd - bound));
    detail("p " + fmt("%.4f", p.p_a) + ": F_delta " + fmt("%.6f", fd) + " vs 1 - pa pb " + fmt("%.6f", bound));
  }
  return {worst <= 5e-4, "max |F_delta - (1 - pa pb)| " + fmt("%.2e", worst) + " (tol 5e-4)"};
}

// 7. RF inhomogeneity at t_d = 0.
Outcome criterion7() {
  TrialSettings s = ideal_settings(0.35, 0.50);
  s.noise.rf_inhomogeneity = true;
  const auto t0 = Clock::now();
  const RfInhomogeneity rf = s.noise.rf();
  const std::vector<EllipsePoint> coded = sweep_points(Mode::Coded, 0.0, s, rf);
  const std::vector<EllipsePoint> control = sweep_points(Mode::Control, 0.0, s, rf);
  const double elapsed = seconds_since(t0);
  auto amp = [](const EllipsePoint &p) { return std::hypot(p.z, p.x); };
  const double reduction = 1 - amp(coded.front()) / amp(control.front());
  const double offset = analyze_ellipse(coded).ellipticity - 1.0;
  const double att_coded = 1 - amp(coded.back()) / amp(coded.front());
  const double att_control = 1 - amp(control.back()) / amp(control.front());
  detail("gamma_a " + fmt("%.6f", rf.gamma_a) + " gamma_b " + fmt("%.6f", rf.gamma_b) + ", " + std::to_string(rf.nodes) +
         "^2 nodes, " + fmt("%.1f", elapsed) + " s");
  detail("(a) amplitude reduction " + fmt("%.4f", reduction) + " (need 0.05-0.15)");
  detail("(b) coded ellipticity offset " + fmt("%.4f", offset) + " (need 0.03-0.10)");
  detail("(c) theta = pi attenuation coded " + fmt("%.4f", att_coded) + ", control " + fmt("%.4f", att_control) +
         " (need 0.04 +- 0.03)");
  const bool a = reduction >= 0.05 && reduction <= 0.15;
  const bool b = offset >= 0.03 && offset <= 0.10;
  const bool c = std::abs(att_coded - 0.04) <= 0.03;
  return {a && b && c && elapsed < 60.0,
          std::string("(a) ") + (a ? "ok " : "out ") + fmt("%.3f", reduction) + ", (b) " + (b ? "ok " : "out ") +
              fmt("%.3f", offset) + ", (c) " + (c ? "ok " : "out ") + fmt("%.3f", att_coded) + ", " +
              fmt("%.1f", elapsed) + " s (< 60 s)"};
}

// 8. Quadrature convergence under node doubling.
Outcome criterion8() {
  TrialSettings s = ideal_settings(0.35, 0.50);
  s.noise.rf_inhomogeneity = true;
  s.noise.rf_nodes = 32;
  const RfInhomogeneity r32 = s.noise.rf();
  RfInhomogeneity r64 = r32;
  r64.nodes = 64;
  double worst = 0.0;
  for (Mode m : {Mode::Coded, Mode::Control})
    for (double th : {0.0, kPi / 4, kPi / 2, kPi})
      for (double td : {0.0, 36.0 / kDefaultJHz}) {
        const PauliCoeffs a = simulate_trial(th, td, m, s, r32, 1).output.raw;
        const PauliCoeffs b = simulate_trial(th, td, m, s, r64, 1).output.raw;
        for (size_t k = 1; k < 16; ++k) {
          if (std::abs(b.flat()[k]) > 0.01) worst = std::max(worst, std::abs(a.flat()[k] / b.flat()[k] - 1));
        }
      }
  return {worst <= 0.015, "max relative change 32 -> 64 nodes " + fmt("%.2e", worst) + " (tol 1.5%)"};
}

// 9. Tomography round trip.
Outcome criterion9() {
  std::mt19937_64 rng(2026);
  std::normal_distribution<double> n(0.0, 1.0);
  auto strip = [](PauliCoeffs c) {
    c(0, 0) = 0.0;
    return c;
  };
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    Matrix4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = Complex(n(rng), n(rng));
    Matrix4 h = 0.5 * (m + m.adjoint());
    h -= (h.trace() / 4.0) * Matrix4::Identity();
    worst = std::max(worst, tomography(h).max_abs_diff(strip(pauli_decompose(h))));
  }
  const TrialSettings s = ideal_settings(0.35, 0.50);
  for (Mode mode : {Mode::Coded, Mode::Control}) {
    const TrialStages st = run_trial_stages(kPi / 3, 24.0 / kDefaultJHz, mode, s);
    for (const Matrix4 *rho : {&st.rho0, &st.rho1, &st.rho3, &st.rho4, &st.rho5}) {
      worst = std::max(worst, tomography(*rho).max_abs_diff(strip(pauli_decompose(*rho))));
    }
  }
  return {worst <= 1e-10, "max reconstruction error " + fmt("%.2e", worst) + " (tol 1e-10)"};
}

// 10. Very different dephasing times.
Outcome criterion10() {
  const RunConfig good = bundled("chloroform_proton_ancilla");
  const SweepResult r = run_sweep(good, 1);
  const double t2a = good.settings.noise.t2_star_a;
  const double t_max = *std::max_element(good.storage_times.begin(), good.storage_times.end());
  double coded_dev = 0.0;
  for (double t : good.storage_times) {
    coded_dev = std::max(coded_dev, find_fit(r, "ideal", Mode::Coded, t).report.ellipticity - 1.0);
  }
  const double ctl = find_fit(r, "ideal", Mode::Control, t_max).report.ellipticity;
  const double ctl_err = std::abs(ctl / std::exp(t_max / t2a) - 1.0);
  detail("good ancilla: max coded eps - 1 = " + fmt("%.4f", coded_dev) + ", control eps(t_max) " + fmt("%.6f", ctl) +
         " vs " + fmt("%.6f", std::exp(t_max / t2a)));

  const RunConfig bad = bundled("chloroform_carbon_ancilla");
  const SweepResult q = run_sweep(bad, 1);
  double excess = -1.0;
  for (double t : bad.storage_times) {
    const DampingParams p = bad.settings.noise.damping(t);
    const double fd = find_fit(q, "ideal", Mode::Coded, t).report.F_delta;
    excess = std::max(excess, fd - (1 - p.p_a * p.p_b));
  }
  detail("poor ancilla: max F_delta - (1 - pa pb) = " + fmt("%.3e", excess));
  return {coded_dev < 0.05 && ctl_err < 1e-9 && excess <= 1e-12,
          "coded eps - 1 max " + fmt("%.4f", coded_dev) + " (< 0.05), control rel err " + fmt("%.1e", ctl_err) +
              ", swapped-role F_delta excess over bound " + fmt("%.1e", excess) + " (<= 0)"};
}

// 11. Tradeoff crossovers.
Outcome criterion11() {
  const double pg = 0.05;
  const double e1 = std::abs(crossover_probability(TradeoffModel::Pool) - 1.0 / 6.0);
  const double e2 = std::abs(crossover_probability(TradeoffModel::GateCost, pg) - pg / (1 - pg));
  const double e3 = std::abs(crossover_probability(TradeoffModel::Signal2m) - 0.25);
  double equal = 0.0;
  for (TradeoffModel m : {TradeoffModel::Pool, TradeoffModel::GateCost, TradeoffModel::Signal2m}) {
    const TradeoffReport r = tradeoff(crossover_probability(m, pg), pg, m);
    equal = std::max(equal, std::abs(r.detection_signal - r.correction_signal));
  }
  const double worst = std::max({e1, e2, e3, equal});
  return {worst <= 1e-12, "crossover errors " + fmt("%.1e", e1) + "/" + fmt("%.1e", e2) + "/" + fmt("%.1e", e3) +
                              ", signal mismatch " + fmt("%.1e", equal) + " (tol 1e-12)"};
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 12. Determinism of repeated runs.
Outcome criterion12(const std::string &work_dir) {
  const RunConfig c = bundled("formate");
  const fs::path a = fs::path(work_dir) / "determinism_a";
  const fs::path b = fs::path(work_dir) / "determinism_b";
  fs::remove_all(a);
  fs::remove_all(b);
  RunOptions o;
  o.out_dir = a.string();
  cmd_run(c, o);
  o.out_dir = b.string();
  o.parallelism = 3;
  cmd_run(c, o);
  int identical = 0, total = 0;
  for (const char *f : {"trials.csv", "fits.csv", "trends.csv"}) {
    ++total;
    const std::string x = slurp(a / f), y = slurp(b / f);
    if (!x.empty() && x == y) ++identical;
    detail(std::string(f) + ": " + (x == y ? "identical" : "DIFFERENT") + ", " + std::to_string(x.size()) + " bytes");
  }
  return {identical == total, std::to_string(identical) + "/" + std::to_string(total) + " CSVs byte-identical"};
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  std::string work_dir = (fs::temp_directory_path() / "phasecode_acceptance").string();
  app.add_option("--criterion", only, "Run one criterion (1-12); 0 runs all")->check(CLI::Range(0, 12));
  app.add_option("--work-dir", work_dir, "Scratch directory for run outputs");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> checks = {
      criterion1, criterion2, criterion3, criterion4,  criterion5,  criterion6,
      criterion7, criterion8, criterion9, criterion10, criterion11, [&] { return criterion12(work_dir); }};
  bool all = true;
  for (int k = 1; k <= 12; ++k) {
    if (only != 0 && k != only) continue;
    Outcome o;
    try {
      o = checks[static_cast<size_t>(k - 1)]();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << o.summary << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
