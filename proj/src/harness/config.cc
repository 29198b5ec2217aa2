// Copyright 2026 The qkernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qkernel/harness/config.h"

#include <cmath>
#include <set>

#include "qkernel/bounds.h"

namespace qkernel::harness {

using nlohmann::json;

std::string_view to_string(Fault f) {
  switch (f) {
    case Fault::kNone:
      return "none";
    case Fault::kDisableShift:
      return "disable_shift";
    case Fault::kBiasedSampler:
      return "biased_sampler";
  }
  return "unknown";
}

Fault parse_fault(std::string_view s) {
  if (s == "none") return Fault::kNone;
  if (s == "disable_shift") return Fault::kDisableShift;
  if (s == "biased_sampler") return Fault::kBiasedSampler;
  throw ConfigError("unknown fault: " + std::string(s));
}

uint64_t ExperimentConfig::shots() const {
  if (!m_auto) return m;
  return static_cast<uint64_t>(std::ceil(m_threshold(n_train, lambda, delta)));
}

ShotModel ExperimentConfig::shot_model() const {
  return {swap_mode, fault == Fault::kBiasedSampler ? kInjectedBias : 0.0};
}

double ExperimentConfig::kernel_shift() const { return fault == Fault::kDisableShift ? 0.0 : lambda / 2.0; }

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("invalid config: " + msg); };
  if (qubits < 1 || qubits > kMaxQubits) fail("qubits must be in [1, 10] (D = 2^n <= 1024)");
  if (n_train < 1) fail("N must be >= 1");
  if (n_test < 1) fail("M must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) fail("lambda must be > 0");
  if (!(p >= 0.0 && p < 1.0)) fail("p must be in [0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) fail("delta must be in (0, 1)");
  if (trials < 1) fail("trials must be >= 1");
  if (threads < 1) fail("threads must be >= 1");
  if (!m_auto && m < 1) fail("m must be >= 1 when m_auto is false");
  const double entries = 0.5 * n_train * (n_train + 1.0);
  const double budget = entries * static_cast<double>(shots()) * trials;
  if (budget > kShotBudget) {
    fail("shot budget exceeded: N(N+1)/2 * m * T = " + std::to_string(budget) + " > 1e10");
  }
}

nlohmann::ordered_json to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["qubits"] = c.qubits;
  j["encoding"] = std::string(to_string(c.encoding));
  j["N"] = c.n_train;
  j["M"] = c.n_test;
  j["lambda"] = c.lambda;
  j["p"] = c.p;
  j["m"] = c.m_auto ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.m);
  j["m_auto"] = c.m_auto;
  j["delta"] = c.delta;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["swap_mode"] = std::string(to_string(c.swap_mode));
  j["test_eval"] = std::string(to_string(c.test_eval));
  j["kernel_source"] = std::string(to_string(c.kernel_source));
  j["test_shots"] = c.test_shots == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.test_shots);
  j["threads"] = c.threads;
  j["fault"] = std::string(to_string(c.fault));
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("invalid config: top level must be a JSON object");
  static const std::set<std::string> known = {
      "qubits", "encoding", "N",      "M",         "lambda",        "p",          "m",       "m_auto", "delta",
      "trials", "seed",     "swap_mode", "test_eval", "kernel_source", "test_shots", "threads", "fault"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError("invalid config: unknown key \"" + key + "\"");
  }

  ExperimentConfig c;
  try {
    if (j.contains("qubits")) c.qubits = j.at("qubits").get<int>();
    if (j.contains("encoding")) c.encoding = parse_encoding(j.at("encoding").get<std::string>());
    if (j.contains("N")) c.n_train = j.at("N").get<int>();
    if (j.contains("M")) c.n_test = j.at("M").get<int>();
    if (j.contains("lambda")) c.lambda = j.at("lambda").get<double>();
    if (j.contains("p")) c.p = j.at("p").get<double>();
    if (j.contains("m_auto")) c.m_auto = j.at("m_auto").get<bool>();
    if (j.contains("m") && !j.at("m").is_null()) {
      if (!j.at("m").is_number_integer() || j.at("m").get<int64_t>() < 1) {
        throw ConfigError("invalid config: m must be a positive integer or null");
      }
      c.m = j.at("m").get<uint64_t>();
      if (!j.contains("m_auto")) c.m_auto = false;
    }
    if (j.contains("delta")) c.delta = j.at("delta").get<double>();
    if (j.contains("trials")) c.trials = j.at("trials").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
    if (j.contains("swap_mode")) c.swap_mode = parse_swap_mode(j.at("swap_mode").get<std::string>());
    if (j.contains("test_eval")) c.test_eval = parse_test_eval(j.at("test_eval").get<std::string>());
    if (j.contains("kernel_source")) c.kernel_source = parse_kernel_source(j.at("kernel_source").get<std::string>());
    if (j.contains("test_shots") && !j.at("test_shots").is_null()) c.test_shots = j.at("test_shots").get<uint64_t>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (j.contains("fault")) c.fault = parse_fault(j.at("fault").get<std::string>());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  c.validate();
  return c;
}

}  // namespace qkernel::harness
