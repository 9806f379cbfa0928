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

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "phasecode/analysis.hpp"
#include "phasecode/channels.hpp"
#include "phasecode/experiment.hpp"
#include "phasecode/gates.hpp"
#include "phasecode/tomography.hpp"

namespace {

using namespace phasecode;

void BM_CompileEncoder(benchmark::State &state) {
  const PulseSequence enc = gate_library("U_enc");
  for (auto _ : state) benchmark::DoNotOptimize(compile(enc, kDefaultJHz));
}
BENCHMARK(BM_CompileEncoder);

void BM_RunTrial(benchmark::State &state) {
  const TrialSettings settings;
  const Mode mode = state.range(0) ? Mode::Coded : Mode::Control;
  for (auto _ : state) benchmark::DoNotOptimize(run_trial(kPi / 3, 0.12, mode, settings));
}
BENCHMARK(BM_RunTrial)->Arg(0)->Arg(1);

void BM_EnsembleAverage(benchmark::State &state) {
  TrialSettings settings;
  settings.noise.rf_inhomogeneity = true;
  settings.noise.rf_nodes = static_cast<int>(state.range(0));
  const RfInhomogeneity rf = settings.noise.rf();
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_trial(kPi / 2, 0.0, Mode::Coded, settings, rf, 1));
  }
}
BENCHMARK(BM_EnsembleAverage)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Tomography(benchmark::State &state) {
  const Matrix4 rho = run_trial(kPi / 4, 0.06, Mode::Coded);
  for (auto _ : state) benchmark::DoNotOptimize(tomography(rho));
}
BENCHMARK(BM_Tomography);

void BM_FitEllipse(benchmark::State &state) {
  std::vector<EllipsePoint> pts;
  for (double th : default_theta_grid(11)) pts.push_back({th, std::cos(th), 0.7 * std::sin(th)});
  for (auto _ : state) benchmark::DoNotOptimize(fit_ellipse(pts));
}
BENCHMARK(BM_FitEllipse);

}  // namespace

BENCHMARK_MAIN();
