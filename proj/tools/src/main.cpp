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

#include <cstdint>
#include <iostream>
#include <string>

#include "phasecode_cli/commands.hpp"

using namespace phasecode;
using namespace phasecode::cli;

namespace {

RunConfig config_or_default(const std::string &path) { return path.empty() ? RunConfig{} : load_config(path); }

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Two-qubit phase-damping detection code simulator"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  int parallelism = 1;

  CLI::App *run = app.add_subcommand("run", "Run the (theta, t_d, mode) sweep and write CSV results");
  run->add_option("--config", config_path, "JSON config file")->required();
  run->add_option("--out-dir", out_dir, "Output directory");
  run->add_option("--seed", seed, "Seed of the Monte-Carlo cross-check");
  run->add_option("--parallelism", parallelism, "Worker threads")->check(CLI::PositiveNumber);

  std::string results_dir = ".";
  std::string figure;
  CLI::App *plot = app.add_subcommand("plot", "Render an SVG figure from run results");
  plot->add_option("--results", results_dir, "Directory holding trials.csv and fits.csv");
  plot->add_option("--figure", figure, "bloch_ellipses|ellipticity_vs_t|p_vs_p|fidelity_vs_t|flows|all")
      ->required();
  plot->add_option("--out-dir", out_dir, "Output directory");

  std::string stage;
  CLI::App *tomo = app.add_subcommand("tomography", "Reconstruct a pipeline state from nine readouts");
  tomo->add_option("--config", config_path, "JSON config file");
  tomo->add_option("--stage", stage, "rho0|rho1|rho3|rho4|rho5")->required();
  tomo->add_option("--out-dir", out_dir, "Output directory");

  double p_min = -1, p_max = -1, p_g = -1;
  int p_steps = -1;
  CLI::App *trade = app.add_subcommand("tradeoff", "Tabulate the detection vs correction tradeoff models");
  trade->add_option("--config", config_path, "JSON config file");
  trade->add_option("--p-min", p_min, "Lower end of the p range");
  trade->add_option("--p-max", p_max, "Upper end of the p range");
  trade->add_option("--p-steps", p_steps, "Number of p values");
  trade->add_option("--p-g", p_g, "Gate failure probability");
  trade->add_option("--out-dir", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) {
      RunOptions options;
      options.out_dir = out_dir;
      options.parallelism = parallelism;
      options.seed = seed;
      const RunOutputs out = cmd_run(load_config(config_path), options);
      for (const std::string &p : out.paths) std::cout << p << "\n";
    } else if (*plot) {
      if (figure == "all") {
        for (const std::string &f : figure_names()) std::cout << cmd_plot(results_dir, f, out_dir) << "\n";
      } else {
        std::cout << cmd_plot(results_dir, figure, out_dir) << "\n";
      }
    } else if (*tomo) {
      const RunConfig config = config_or_default(config_path);
      for (const std::string &p : cmd_tomography(config, stage, out_dir)) std::cout << p << "\n";
    } else if (*trade) {
      TradeoffSettings t = config_or_default(config_path).tradeoff;
      if (p_min >= 0) t.p_min = p_min;
      if (p_max >= 0) t.p_max = p_max;
      if (p_steps >= 0) t.p_steps = p_steps;
      if (p_g >= 0) t.p_g = p_g;
      if (t.p_min < 0 || t.p_max > 0.5 || t.p_g > 0.5) throw ConfigError("tradeoff: p values must lie in [0, 0.5]");
      for (const std::string &p : cmd_tradeoff(t, out_dir)) std::cout << p << "\n";
    }
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericError &e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
