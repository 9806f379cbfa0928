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

#include "phasecode_cli/commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "phasecode/channels.hpp"
#include "phasecode/tomography.hpp"
#include "phasecode/tradeoff.hpp"
#include "phasecode_cli/svg.hpp"

#ifndef PHASECODE_CLI_VERSION
#define PHASECODE_CLI_VERSION "0.0.0"
#endif

namespace phasecode::cli {

namespace fs = std::filesystem;

namespace {

using Points = std::vector<std::pair<double, double>>;

std::string write_file(const std::string &dir, const std::string &name, const std::string &text) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
  const std::string path = (fs::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
  if (!out) throw ConfigError("cannot write " + path);
  return path;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read results file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string mc_check_csv(const RunConfig &config, std::uint64_t seed) {
  std::string s = "variant,mode,theta,t_d,samples,seed,quadrature_z,quadrature_x,mc_z,mc_x\n";
  const double theta = kPi / 2;
  const double t_d = config.storage_times.empty() ? 0.0 : *std::min_element(config.storage_times.begin(),
                                                                            config.storage_times.end());
  for (const Variant &v : variants_of(config)) {
    if (!v.settings.noise.rf_inhomogeneity) continue;
    const RfInhomogeneity rf = v.settings.noise.rf();
    for (Mode mode : config.modes) {
      const TrialSettings &settings = v.settings;
      const ScaledExperiment exp = [&](double sa, double sb) {
        RfScales scales;
        scales.a = sa;
        scales.b = sb;
        return readout(run_trial(theta, t_d, mode, settings, scales), sa).raw;
      };
      const BlochVector q = decode_acquired(ensemble_average(exp, rf, 1)).accepted;
      const BlochVector m = decode_acquired(monte_carlo_average(exp, rf, config.monte_carlo_samples, seed)).accepted;
      s += v.name + "," + std::string(to_string(mode)) + "," + format_double(theta) + "," + format_double(t_d) + "," +
           std::to_string(config.monte_carlo_samples) + "," + std::to_string(seed) + "," + format_double(q.z) + "," +
           format_double(q.x) + "," + format_double(m.z) + "," + format_double(m.x) + "\n";
    }
  }
  return s;
}

// Groups of fits keyed by (variant, mode), in file order.
std::vector<std::pair<std::string, std::vector<const FitRow *>>> fit_series(const std::vector<FitRow> &fits) {
  std::vector<std::pair<std::string, std::vector<const FitRow *>>> out;
  for (const FitRow &f : fits) {
    const std::string key = f.variant + " " + std::string(to_string(f.mode));
    auto it = std::find_if(out.begin(), out.end(), [&](const auto &e) { return e.first == key; });
    if (it == out.end()) {
      out.push_back({key, {}});
      it = out.end() - 1;
    }
    it->second.push_back(&f);
  }
  for (auto &[key, rows] : out) {
    std::stable_sort(rows.begin(), rows.end(), [](const FitRow *a, const FitRow *b) { return a->t_d < b->t_d; });
  }
  return out;
}

struct TrialGroup {
  std::string variant;
  Mode mode;
  // t_d -> (theta, x, z) sorted by theta
  std::map<double, std::vector<std::array<double, 3>>> by_time;
};

std::vector<TrialGroup> trial_groups(const std::vector<TrialRow> &trials) {
  std::vector<TrialGroup> out;
  for (const TrialRow &t : trials) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const TrialGroup &g) { return g.variant == t.variant && g.mode == t.record.mode; });
    if (it == out.end()) {
      out.push_back({t.variant, t.record.mode, {}});
      it = out.end() - 1;
    }
    const BlochVector &a = t.record.output.accepted;
    it->by_time[t.record.t_d].push_back({t.record.theta, a.x, a.z});
  }
  for (TrialGroup &g : out) {
    for (auto &[t, pts] : g.by_time) std::sort(pts.begin(), pts.end());
  }
  return out;
}

std::string group_title(const TrialGroup &g) { return g.variant + " " + std::string(to_string(g.mode)); }

Panel bloch_panel(const std::string &title) {
  Panel p(title, "x", "z");
  p.set_range(-0.9, 1.1, -1.1, 1.1);
  p.set_equal_aspect(true);
  p.set_legend_corner(Corner::TopLeft);
  return p;
}

std::string figure_bloch_ellipses(const std::vector<TrialRow> &trials) {
  std::vector<Panel> panels;
  for (const TrialGroup &g : trial_groups(trials)) {
    Panel p = bloch_panel(group_title(g));
    Points circle;
    for (int k = 0; k <= 64; ++k) {
      const double th = kPi * k / 64.0;
      circle.emplace_back(std::sin(th), std::cos(th));
    }
    p.line(circle, "#bbbbbb", Stroke::Dotted);
    size_t k = 0;
    for (const auto &[t, pts] : g.by_time) {
      Points line;
      for (const auto &q : pts) line.emplace_back(q[1], q[2]);
      p.line(line, palette(k), Stroke::Solid, "t_d = " + short_number(t) + " s");
      p.markers(line, palette(k));
      ++k;
    }
    panels.push_back(std::move(p));
  }
  return render_svg(panels);
}

std::string figure_flows(const std::vector<TrialRow> &trials) {
  std::vector<Panel> panels;
  for (const TrialGroup &g : trial_groups(trials)) {
    Panel p = bloch_panel(group_title(g) + " flows");
    std::map<double, Points> by_theta;
    for (const auto &[t, pts] : g.by_time) {
      for (const auto &q : pts) by_theta[q[0]].emplace_back(q[1], q[2]);
    }
    size_t k = 0;
    for (const auto &[theta, line] : by_theta) {
      p.line(line, palette(k), Stroke::Solid);
      p.markers({line.front()}, palette(k));
      ++k;
    }
    panels.push_back(std::move(p));
  }
  return render_svg(panels);
}

std::string figure_ellipticity(const std::vector<FitRow> &fits) {
  Panel p("Ellipticity", "t_d (s)", "epsilon");
  p.set_legend_corner(Corner::TopLeft);
  size_t k = 0;
  for (const auto &[key, rows] : fit_series(fits)) {
    Points pts;
    for (const FitRow *f : rows) pts.emplace_back(f->t_d, f->report.ellipticity);
    p.line(pts, palette(k), Stroke::Solid, key);
    p.markers(pts, palette(k));
    ++k;
  }
  return render_svg({p});
}

std::string figure_fidelity(const std::vector<FitRow> &fits) {
  Panel pe("Fidelity from ellipticity", "t_d (s)", "F_epsilon");
  Panel pd("Overlap fidelity", "t_d (s)", "F_delta");
  pe.set_legend_corner(Corner::BottomLeft);
  pd.set_legend_corner(Corner::BottomLeft);
  size_t k = 0;
  for (const auto &[key, rows] : fit_series(fits)) {
    Points e, d;
    for (const FitRow *f : rows) {
      e.emplace_back(f->t_d, f->report.F_epsilon);
      d.emplace_back(f->t_d, f->report.F_delta);
    }
    pe.line(e, palette(k), Stroke::Solid, key);
    pe.markers(e, palette(k));
    pd.line(d, palette(k), Stroke::Solid, key);
    pd.markers(d, palette(k));
    ++k;
  }
  return render_svg({pe, pd});
}

std::string figure_p_vs_p(const std::vector<FitRow> &fits) {
  Panel p("Error probability, coded vs control", "p control", "p coded");
  std::map<std::string, std::map<double, double>> coded, control;
  std::vector<std::string> variants;
  for (const FitRow &f : fits) {
    if (std::find(variants.begin(), variants.end(), f.variant) == variants.end()) variants.push_back(f.variant);
    (f.mode == Mode::Coded ? coded : control)[f.variant][f.t_d] = f.report.p_epsilon;
  }
  double top = 0.05;
  size_t k = 0;
  for (const std::string &v : variants) {
    Points pts;
    for (const auto &[t, pc] : control[v]) {
      auto it = coded[v].find(t);
      if (it == coded[v].end()) continue;
      pts.emplace_back(pc, it->second);
      top = std::max({top, pc, it->second});
    }
    std::sort(pts.begin(), pts.end());
    p.line(pts, palette(k), Stroke::Solid, v);
    p.markers(pts, palette(k));
    ++k;
  }
  top *= 1.05;
  p.line({{0.0, 0.0}, {top, top}}, "#555555", Stroke::Dotted, "45 degrees");
  p.set_range(0.0, top, 0.0, top);
  p.set_equal_aspect(true);
  p.set_legend_corner(Corner::TopLeft);
  return render_svg({p});
}

}  // namespace

std::string tool_version() { return PHASECODE_CLI_VERSION; }

RunOutputs cmd_run(const RunConfig &config, const RunOptions &options) {
  RunOutputs out;
  out.result = run_sweep(config, options.parallelism);
  out.paths.push_back(write_file(options.out_dir, "trials.csv", trials_csv(out.result)));
  out.paths.push_back(write_file(options.out_dir, "fits.csv", fits_csv(out.result)));
  out.paths.push_back(write_file(options.out_dir, "trends.csv", trends_csv(out.result)));
  if (config.monte_carlo_samples > 0) {
    std::string mc;
    try {
      mc = mc_check_csv(config, options.seed);
    } catch (const std::invalid_argument &e) {
      throw NumericError(std::string("Monte-Carlo cross-check: ") + e.what());
    }
    out.paths.push_back(write_file(options.out_dir, "mc_check.csv", mc));
  }
  out.paths.push_back(write_file(options.out_dir, "resolved_config.json", to_json(config).dump(2) + "\n"));
  nlohmann::json manifest = {{"config_digest", config_digest(config)},
                             {"config_name", config.name},
                             {"tool_version", tool_version()},
                             {"timestamp", utc_timestamp()},
                             {"output_paths", out.paths}};
  out.paths.push_back(write_file(options.out_dir, "manifest.json", manifest.dump(2) + "\n"));
  return out;
}

const std::vector<std::string> &figure_names() {
  static const std::vector<std::string> names = {"bloch_ellipses", "ellipticity_vs_t", "p_vs_p", "fidelity_vs_t",
                                                 "flows"};
  return names;
}

std::string render_figure(const std::string &figure, const std::vector<TrialRow> &trials,
                          const std::vector<FitRow> &fits) {
  const auto &names = figure_names();
  if (std::find(names.begin(), names.end(), figure) == names.end()) {
    throw ConfigError("unknown figure '" + figure + "'");
  }
  const bool needs_trials = figure == "bloch_ellipses" || figure == "flows";
  if (needs_trials ? trials.empty() : fits.empty()) throw ConfigError("no results to plot for " + figure);
  if (figure == "bloch_ellipses") return figure_bloch_ellipses(trials);
  if (figure == "flows") return figure_flows(trials);
  if (figure == "ellipticity_vs_t") return figure_ellipticity(fits);
  if (figure == "fidelity_vs_t") return figure_fidelity(fits);
  return figure_p_vs_p(fits);
}

std::string cmd_plot(const std::string &results_dir, const std::string &figure, const std::string &out_dir) {
  const auto &names = figure_names();
  if (std::find(names.begin(), names.end(), figure) == names.end()) {
    throw ConfigError("unknown figure '" + figure + "'");
  }
  std::vector<TrialRow> trials;
  std::vector<FitRow> fits;
  try {
    trials = parse_trials_csv(read_file((fs::path(results_dir) / "trials.csv").string()));
    fits = parse_fits_csv(read_file((fs::path(results_dir) / "fits.csv").string()));
  } catch (const std::invalid_argument &e) {
    throw ConfigError(std::string("bad results in ") + results_dir + ": " + e.what());
  }
  return write_file(out_dir, figure + ".svg", render_figure(figure, trials, fits));
}

int parse_stage(const std::string &stage) {
  static const std::map<std::string, int> stages = {{"rho0", 0}, {"rho1", 1}, {"rho3", 3}, {"rho4", 4}, {"rho5", 5}};
  auto it = stages.find(stage);
  if (it == stages.end()) throw ConfigError("unknown stage '" + stage + "' (expected rho0|rho1|rho3|rho4|rho5)");
  return it->second;
}

std::string tomography_csv(const PauliCoeffs &reconstructed, const PauliCoeffs &direct) {
  std::string s = "i,j,reconstructed,direct\n";
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      s += std::to_string(i) + "," + std::to_string(j) + "," + format_double(reconstructed(i, j)) + "," +
           format_double(direct(i, j)) + "\n";
    }
  }
  return s;
}

std::string density_matrix_csv(const PauliCoeffs &c) {
  const Matrix4 m = reconstruct(c);
  std::string s = "row,col,amplitude,phase\n";
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) {
      const double amp = std::abs(m(r, k));
      const double phase = amp > 1e-12 ? std::arg(m(r, k)) : 0.0;
      s += std::to_string(r) + "," + std::to_string(k) + "," + format_double(amp) + "," + format_double(phase) + "\n";
    }
  }
  return s;
}

std::vector<std::string> cmd_tomography(const RunConfig &config, const std::string &stage, const std::string &out_dir) {
  const int index = parse_stage(stage);
  TrialStages st;
  try {
    st = run_trial_stages(config.tomography.theta, config.tomography.t_d, Mode::Coded, config.settings);
  } catch (const std::invalid_argument &e) {
    throw NumericError(std::string("tomography stage ") + stage + ": " + e.what());
  }
  const Matrix4 *rho = nullptr;
  switch (index) {
    case 0: rho = &st.rho0; break;
    case 1: rho = &st.rho1; break;
    case 3: rho = &st.rho3; break;
    case 4: rho = &st.rho4; break;
    default: rho = &st.rho5; break;
  }
  const PauliCoeffs direct = pauli_decompose(*rho);
  const PauliCoeffs rec = tomography(*rho);
  return {write_file(out_dir, "tomography_" + stage + ".csv", tomography_csv(rec, direct)),
          write_file(out_dir, "tomography_" + stage + "_matrix.csv", density_matrix_csv(rec))};
}

std::vector<double> tradeoff_grid(const TradeoffSettings &settings) {
  std::vector<double> grid;
  if (settings.p_steps <= 0 || settings.p_min > settings.p_max) return grid;
  if (settings.p_steps == 1) return {settings.p_min};
  for (int k = 0; k < settings.p_steps; ++k) {
    grid.push_back(settings.p_min + (settings.p_max - settings.p_min) * k / (settings.p_steps - 1));
  }
  return grid;
}

namespace {

constexpr TradeoffModel kModels[] = {TradeoffModel::Pool, TradeoffModel::GateCost, TradeoffModel::Signal2m};

}  // namespace

std::string tradeoff_csv(const TradeoffSettings &settings) {
  std::string s =
      "model,p,p_g,detection_signal,correction_signal,detection_fidelity,correction_fidelity,crossover_p,"
      "detection_preferred\n";
  for (TradeoffModel m : kModels) {
    for (double p : tradeoff_grid(settings)) {
      const TradeoffReport r = tradeoff(p, settings.p_g, m);
      s += std::string(to_string(m)) + "," + format_double(p) + "," + format_double(r.p_g) + "," +
           format_double(r.detection_signal) + "," + format_double(r.correction_signal) + "," +
           format_double(r.detection_fidelity) + "," + format_double(r.correction_fidelity) + "," +
           format_double(r.crossover_p) + "," + (p <= r.crossover_p ? "1" : "0") + "\n";
    }
  }
  return s;
}

std::string crossovers_csv(const TradeoffSettings &settings) {
  std::string s = "model,p_g,crossover_p,p_marker,marker_within_crossover\n";
  for (TradeoffModel m : kModels) {
    const double pc = crossover_probability(m, settings.p_g);
    s += std::string(to_string(m)) + "," + format_double(settings.p_g) + "," + format_double(pc) + "," +
         format_double(settings.p_marker) + "," + (settings.p_marker <= pc ? "1" : "0") + "\n";
  }
  return s;
}

std::vector<std::string> cmd_tradeoff(const TradeoffSettings &settings, const std::string &out_dir) {
  std::vector<std::string> paths;
  paths.push_back(write_file(out_dir, "tradeoff.csv", tradeoff_csv(settings)));
  paths.push_back(write_file(out_dir, "tradeoff_crossovers.csv", crossovers_csv(settings)));
  std::vector<Panel> panels;
  const std::vector<double> grid = tradeoff_grid(settings);
  for (TradeoffModel m : kModels) {
    Panel p(std::string(to_string(m)), "p", "signal");
    Points det, cor;
    double top = 0.0;
    for (double q : grid) {
      const TradeoffReport r = tradeoff(q, settings.p_g, m);
      det.emplace_back(q, r.detection_signal);
      cor.emplace_back(q, r.correction_signal);
      top = std::max({top, r.detection_signal, r.correction_signal});
    }
    p.line(det, palette(0), Stroke::Solid, "detection");
    p.line(cor, palette(1), Stroke::Dashed, "correction");
    p.set_legend_corner(Corner::BottomLeft);
    const double pc = crossover_probability(m, settings.p_g);
    p.vertical(pc, "#333333", Stroke::Dashed, "p* = " + short_number(pc));
    p.vertical(settings.p_marker, "#2ca02c", Stroke::Dotted, "p <= " + short_number(settings.p_marker));
    const double hi = std::max({settings.p_max, pc, settings.p_marker});
    p.set_range(std::min(settings.p_min, 0.0), hi * 1.02, 0.0, std::max(top, 0.1) * 1.1);
    panels.push_back(std::move(p));
  }
  paths.push_back(write_file(out_dir, "tradeoff.svg", render_svg(panels)));
  return paths;
}

}  // namespace phasecode::cli
