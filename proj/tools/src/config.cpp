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

#include "phasecode_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <openssl/evp.h>

#include "phasecode/sequence_io.hpp"

namespace phasecode::cli {

namespace {

using nlohmann::json;

// Section reader that rejects unknown keys and wrong types.
class Section {
 public:
  Section(const json &tree, std::string name) : name_(std::move(name)) {
    if (tree.contains(name_)) {
      node_ = tree.at(name_);
      if (!node_.is_object()) fail("must be an object");
    } else {
      node_ = json::object();
    }
  }

  double number(const std::string &key, double fallback) {
    seen_.insert(key);
    if (!node_.contains(key)) return fallback;
    const json &v = node_.at(key);
    if (!v.is_number()) fail(key + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(key + " must be finite");
    return d;
  }

  int integer(const std::string &key, int fallback) {
    seen_.insert(key);
    if (!node_.contains(key)) return fallback;
    const json &v = node_.at(key);
    if (!v.is_number_integer()) fail(key + " must be an integer");
    return v.get<int>();
  }

  bool boolean(const std::string &key, bool fallback) {
    seen_.insert(key);
    if (!node_.contains(key)) return fallback;
    const json &v = node_.at(key);
    if (!v.is_boolean()) fail(key + " must be true or false");
    return v.get<bool>();
  }

  std::string text(const std::string &key, const std::string &fallback) {
    seen_.insert(key);
    if (!node_.contains(key)) return fallback;
    const json &v = node_.at(key);
    if (!v.is_string()) fail(key + " must be a string");
    return v.get<std::string>();
  }

  bool has(const std::string &key) const { return node_.contains(key); }

  const json &raw(const std::string &key) {
    seen_.insert(key);
    return node_.at(key);
  }

  std::vector<double> numbers(const std::string &key) {
    const json &v = raw(key);
    if (!v.is_array()) fail(key + " must be an array of numbers");
    std::vector<double> out;
    for (const json &x : v) {
      if (!x.is_number() || !std::isfinite(x.get<double>())) fail(key + " must hold finite numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }

  void finish() const {
    for (const auto &[key, value] : node_.items()) {
      if (!seen_.count(key)) fail("unknown key '" + key + "'");
    }
  }

  [[noreturn]] void fail(const std::string &what) const { throw ConfigError(name_ + ": " + what); }

 private:
  std::string name_;
  json node_;
  std::set<std::string> seen_;
};

void require(bool ok, const std::string &what) {
  if (!ok) throw ConfigError(what);
}

PulseSequence parse_sequence(const json &node, const std::string &name) {
  try {
    return node.get<PulseSequence>();
  } catch (const std::exception &e) {
    throw ConfigError("sequences: " + name + ": " + e.what());
  }
}

void check_equivalent(const PulseSequence &seq, const Matrix4 &target, double j_hz, const std::string &name) {
  const double overlap = phase_insensitive_overlap(compile(seq, j_hz), target);
  require(std::abs(overlap - 1.0) <= kValidationTol,
          "sequences: " + name + " does not compile to the expected unitary (overlap " + std::to_string(overlap) + ")");
}

}  // namespace

RunConfig parse_config(const json &tree) {
  if (!tree.is_object()) throw ConfigError("config root must be an object");
  static const std::set<std::string> sections = {"name",     "system",     "relaxation", "noise",   "sweep",
                                                 "analysis", "sequences",  "tomography", "tradeoff"};
  for (const auto &[key, value] : tree.items()) {
    if (!sections.count(key)) throw ConfigError("unknown section '" + key + "'");
  }

  RunConfig c;
  if (tree.contains("name")) {
    require(tree.at("name").is_string(), "name must be a string");
    c.name = tree.at("name").get<std::string>();
  }
  TrialSettings &s = c.settings;
  NoiseConfig &n = s.noise;

  Section sys(tree, "system");
  s.j_hz = sys.number("j_hz", s.j_hz);
  s.omega_a = sys.number("omega_a", s.omega_a);
  s.omega_b = sys.number("omega_b", s.omega_b);
  s.labeled_input = sys.boolean("labeled_input", s.labeled_input);
  sys.finish();
  require(s.j_hz > 0.0, "system: j_hz must be > 0");
  require(s.omega_a > 0.0 && s.omega_b >= 0.0, "system: omega_a must be > 0 and omega_b >= 0");

  Section rel(tree, "relaxation");
  n.t2_star_a = rel.number("t2_star_a", n.t2_star_a);
  n.t2_star_b = rel.number("t2_star_b", n.t2_star_b);
  n.relax.t1_a = rel.number("t1_a", n.relax.t1_a);
  n.relax.t1_b = rel.number("t1_b", n.relax.t1_b);
  n.relax.z_inf_a = rel.number("z_inf_a", 1.0);
  n.relax.z_inf_b = rel.number("z_inf_b", s.omega_b / s.omega_a);
  n.rf_attenuation_a = rel.number("rf_attenuation_a", n.rf_attenuation_a);
  n.rf_attenuation_b = rel.number("rf_attenuation_b", n.rf_attenuation_b);
  rel.finish();
  require(n.t2_star_a > 0.0 && n.t2_star_b > 0.0, "relaxation: T2* must be > 0");
  require(n.relax.t1_a > 0.0 && n.relax.t1_b > 0.0, "relaxation: T1 must be > 0");
  require(n.rf_attenuation_a > 0.5 && n.rf_attenuation_a <= 1.0 && n.rf_attenuation_b > 0.5 &&
              n.rf_attenuation_b <= 1.0,
          "relaxation: RF attenuations must lie in (0.5, 1]");

  Section noise(tree, "noise");
  n.dephasing = noise.boolean("dephasing", n.dephasing);
  n.amplitude_relaxation = noise.boolean("amplitude_relaxation", n.amplitude_relaxation);
  n.rf_inhomogeneity = noise.boolean("rf_inhomogeneity", n.rf_inhomogeneity);
  n.rf_truncation = noise.number("rf_truncation", n.rf_truncation);
  n.rf_nodes = noise.integer("rf_nodes", n.rf_nodes);
  try {
    s.refocus = parse_refocus(noise.text("refocus", std::string(to_string(s.refocus))));
  } catch (const std::invalid_argument &e) {
    throw ConfigError(std::string("noise: ") + e.what());
  }
  noise.finish();
  require(n.rf_truncation > 0.0, "noise: rf_truncation must be > 0");
  require(n.rf_nodes >= 2 && n.rf_nodes <= 4096, "noise: rf_nodes must lie in [2, 4096]");

  Section sweep(tree, "sweep");
  if (sweep.has("thetas")) {
    c.thetas = sweep.numbers("thetas");
  } else {
    const int count = sweep.integer("theta_count", 11);
    require(count >= 2, "sweep: theta_count must be >= 2");
    c.thetas = default_theta_grid(count);
  }
  if (sweep.has("storage_times")) {
    c.storage_times = sweep.numbers("storage_times");
  } else {
    const int count = sweep.integer("storage_steps", 6);
    require(count >= 1, "sweep: storage_steps must be >= 1");
    c.storage_times = default_storage_times(s.j_hz, count);
  }
  if (sweep.has("modes")) {
    const json &m = sweep.raw("modes");
    require(m.is_array() && !m.empty(), "sweep: modes must be a non-empty array");
    c.modes.clear();
    for (const json &x : m) {
      require(x.is_string(), "sweep: modes must hold strings");
      try {
        c.modes.push_back(parse_mode(x.get<std::string>()));
      } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("sweep: ") + e.what());
      }
    }
  }
  sweep.finish();
  require(!c.thetas.empty(), "sweep: theta grid is empty");
  for (double t : c.storage_times) require(t >= 0.0, "sweep: storage times must be >= 0");

  Section an(tree, "analysis");
  c.fit.max_iterations = an.integer("max_iterations", c.fit.max_iterations);
  c.fit.relative_step = an.number("relative_step", c.fit.relative_step);
  c.fit.bootstrap = an.boolean("bootstrap", c.fit.bootstrap);
  c.fit.bootstrap_samples = an.integer("bootstrap_samples", c.fit.bootstrap_samples);
  c.fit.seed = static_cast<std::uint64_t>(an.integer("seed", static_cast<int>(c.fit.seed)));
  c.trend_weights = an.text("trend_weights", c.trend_weights);
  c.monte_carlo_samples = an.integer("monte_carlo_samples", c.monte_carlo_samples);
  an.finish();
  require(c.fit.max_iterations >= 1, "analysis: max_iterations must be >= 1");
  require(c.fit.relative_step > 0.0, "analysis: relative_step must be > 0");
  require(c.trend_weights == "uniform" || c.trend_weights == "inverse_variance",
          "analysis: trend_weights must be 'uniform' or 'inverse_variance'");
  require(c.monte_carlo_samples >= 0, "analysis: monte_carlo_samples must be >= 0");

  Section seqs(tree, "sequences");
  GateOptions opts;
  opts.j_hz = s.j_hz;
  const Matrix4 enc = compile(gate_library("U_enc", opts), s.j_hz);
  if (seqs.has("U_enc")) {
    s.encoder = parse_sequence(seqs.raw("U_enc"), "U_enc");
    check_equivalent(*s.encoder, enc, s.j_hz, "U_enc");
  }
  if (seqs.has("U_dec")) {
    s.decoder = parse_sequence(seqs.raw("U_dec"), "U_dec");
    check_equivalent(*s.decoder, enc.adjoint(), s.j_hz, "U_dec");
  }
  seqs.finish();

  Section tomo(tree, "tomography");
  c.tomography.theta = tomo.number("theta", c.tomography.theta);
  c.tomography.t_d = tomo.number("t_d", 24.0 / s.j_hz);
  tomo.finish();
  require(c.tomography.t_d >= 0.0, "tomography: t_d must be >= 0");

  Section tr(tree, "tradeoff");
  c.tradeoff.p_min = tr.number("p_min", c.tradeoff.p_min);
  c.tradeoff.p_max = tr.number("p_max", c.tradeoff.p_max);
  c.tradeoff.p_steps = tr.integer("p_steps", c.tradeoff.p_steps);
  c.tradeoff.p_g = tr.number("p_g", c.tradeoff.p_g);
  c.tradeoff.p_marker = tr.number("p_marker", c.tradeoff.p_marker);
  tr.finish();
  require(c.tradeoff.p_min >= 0.0 && c.tradeoff.p_max <= 0.5 && c.tradeoff.p_min <= c.tradeoff.p_max,
          "tradeoff: need 0 <= p_min <= p_max <= 0.5");
  require(c.tradeoff.p_steps >= 0, "tradeoff: p_steps must be >= 0");
  require(c.tradeoff.p_g >= 0.0 && c.tradeoff.p_g <= 0.5, "tradeoff: p_g must lie in [0, 0.5]");
  return c;
}

RunConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json tree;
  try {
    tree = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error &e) {
    throw ConfigError("cannot parse " + path + ": " + e.what());
  }
  return parse_config(tree);
}

json to_json(const RunConfig &c) {
  const TrialSettings &s = c.settings;
  const NoiseConfig &n = s.noise;
  json modes = json::array();
  for (Mode m : c.modes) modes.push_back(std::string(to_string(m)));
  json tree = {
      {"name", c.name},
      {"system", {{"j_hz", s.j_hz}, {"omega_a", s.omega_a}, {"omega_b", s.omega_b}, {"labeled_input", s.labeled_input}}},
      {"relaxation",
       {{"t2_star_a", n.t2_star_a},
        {"t2_star_b", n.t2_star_b},
        {"t1_a", n.relax.t1_a},
        {"t1_b", n.relax.t1_b},
        {"z_inf_a", n.relax.z_inf_a},
        {"z_inf_b", n.relax.z_inf_b},
        {"rf_attenuation_a", n.rf_attenuation_a},
        {"rf_attenuation_b", n.rf_attenuation_b}}},
      {"noise",
       {{"dephasing", n.dephasing},
        {"amplitude_relaxation", n.amplitude_relaxation},
        {"rf_inhomogeneity", n.rf_inhomogeneity},
        {"rf_truncation", n.rf_truncation},
        {"rf_nodes", n.rf_nodes},
        {"refocus", std::string(to_string(s.refocus))}}},
      {"sweep", {{"thetas", c.thetas}, {"storage_times", c.storage_times}, {"modes", modes}}},
      {"analysis",
       {{"max_iterations", c.fit.max_iterations},
        {"relative_step", c.fit.relative_step},
        {"bootstrap", c.fit.bootstrap},
        {"bootstrap_samples", c.fit.bootstrap_samples},
        {"seed", c.fit.seed},
        {"trend_weights", c.trend_weights},
        {"monte_carlo_samples", c.monte_carlo_samples}}},
      {"sequences", {{"U_enc", s.encoder_sequence()}, {"U_dec", s.decoder_sequence()}}},
      {"tomography", {{"theta", c.tomography.theta}, {"t_d", c.tomography.t_d}}},
      {"tradeoff",
       {{"p_min", c.tradeoff.p_min},
        {"p_max", c.tradeoff.p_max},
        {"p_steps", c.tradeoff.p_steps},
        {"p_g", c.tradeoff.p_g},
        {"p_marker", c.tradeoff.p_marker}}},
  };
  return tree;
}

std::string sha256_hex(const std::string &bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < length; ++k) {
    out.push_back(hex[digest[k] >> 4]);
    out.push_back(hex[digest[k] & 0xf]);
  }
  return out;
}

std::string config_digest(const RunConfig &config) { return sha256_hex(to_json(config).dump()); }

}  // namespace phasecode::cli
