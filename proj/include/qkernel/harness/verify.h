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

#ifndef QKERNEL_HARNESS_VERIFY_H_
#define QKERNEL_HARNESS_VERIFY_H_

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qkernel/harness/config.h"

namespace qkernel::harness {

// Property suites run as one command. Every suite uses fixed parameters and
// seeds derived from config.seed; config.fault injects a negative control.

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
};

struct VerifyOptions {
  bool skip_slow = false;  // skip the end-to-end sweeps
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct SuiteCheck {
  std::string name;
  bool slow = false;
  std::function<CheckResult(const ExperimentConfig&)> run;
};

// The registry, in execution order.
const std::vector<SuiteCheck>& suite_checks();

VerifyReport verify_suite(const ExperimentConfig& config, const VerifyOptions& options = {});
nlohmann::ordered_json report_to_json(const VerifyReport& report);

// Individual suites, exposed for tests.
CheckResult check_noisy_kernel_factorization(const ExperimentConfig& config);
CheckResult check_estimator_unbiasedness(const ExperimentConfig& config);
CheckResult check_hoeffding_event_frequency(const ExperimentConfig& config);
CheckResult check_sandwich_chain(const ExperimentConfig& config);
CheckResult check_remark1_algebra(const ExperimentConfig& config);
CheckResult check_threshold_inversion(const ExperimentConfig& config);
CheckResult check_end_to_end_trends(const ExperimentConfig& config);

// Trend rule for a sequence of medians: at most one increase between
// neighbours, and that increase no larger than the IQR of either neighbour.
bool non_increasing_with_one_inversion(const std::vector<double>& medians, const std::vector<double>& iqrs);

}  // namespace qkernel::harness

#endif  // QKERNEL_HARNESS_VERIFY_H_
