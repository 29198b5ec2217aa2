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

#ifndef QKERNEL_HARNESS_CONFIG_H_
#define QKERNEL_HARNESS_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qkernel/learning.h"
#include "qkernel/quantum.h"
#include "qkernel/sampling.h"

namespace qkernel::harness {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Deliberate faults for negative-control runs of the verification suite.
enum class Fault { kNone, kDisableShift, kBiasedSampler };

std::string_view to_string(Fault f);
Fault parse_fault(std::string_view s);

// Simulated shots per campaign, N(N+1)/2 * m * T, are capped at this value.
inline constexpr double kShotBudget = 1e10;
// Expectation shift of every shot under Fault::kBiasedSampler.
inline constexpr double kInjectedBias = 0.1;

struct ExperimentConfig {
  int qubits = 2;
  Encoding encoding = Encoding::kAngleEntangled;
  int n_train = 32;     // N
  int n_test = 2000;    // M
  double lambda = 1.0;
  double p = 0.1;
  uint64_t m = 0;       // used when !m_auto
  bool m_auto = true;   // m = ceil(m_threshold(N, lambda, delta))
  double delta = 0.1;
  int trials = 20;
  uint64_t seed = 1;
  SwapTestMode swap_mode = SwapTestMode::kIdealized;
  TestEval test_eval = TestEval::kShotEstimatedRow;
  KernelSource kernel_source = KernelSource::kShotEstimated;
  uint64_t test_shots = 0;  // 0: same as training m
  int threads = 1;
  Fault fault = Fault::kNone;

  FeatureMapSpec feature_map() const { return {qubits, encoding}; }
  // Shots per training-kernel entry.
  uint64_t shots() const;
  uint64_t shots_per_test_entry() const { return test_shots == 0 ? shots() : test_shots; }
  ShotModel shot_model() const;
  // Shift s applied to the estimated kernel before the event check:
  // lambda/2 normally, 0 under Fault::kDisableShift.
  double kernel_shift() const;

  // Throws ConfigError on any out-of-range field or a blown shot budget.
  void validate() const;
};

nlohmann::ordered_json to_json(const ExperimentConfig& c);
// Starts from defaults, overrides keys present in `j`, rejects unknown keys,
// then validates. Throws ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& j);

}  // namespace qkernel::harness

#endif  // QKERNEL_HARNESS_CONFIG_H_
