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

#ifndef QKERNEL_HARNESS_CAMPAIGN_H_
#define QKERNEL_HARNESS_CAMPAIGN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qkernel/harness/config.h"
#include "qkernel/harness/problem.h"

namespace qkernel::harness {

struct RunRecord {
  int trial = 0;
  uint64_t seed = 0;
  bool event_ok = false;
  std::optional<double> empirical_error;  // present iff event_ok and the solve succeeded
  std::optional<double> remark1_bound;    // intermediate bound on K^ + (lambda/2) I
  double theorem2_bound = 0.0;
  double theorem2_regularizer = 0.0;
  std::optional<double> error_to_bound_ratio;
  double min_eig_khat = 0.0;
  double max_abs_dev = 0.0;  // max |K^ - K~|
  double wall_time = 0.0;    // seconds; not serialized to CSV
};

// Seed of trial `trial` in the campaign seeded by config.seed.
uint64_t trial_seed(const ExperimentConfig& config, int trial);

// The training kernel the configured source produces for `problem`
// (K, K~, or an m-shot estimate of K~ drawn from `shot_seed`).
KernelMatrix training_kernel(const ExperimentConfig& config, const Problem& problem, uint64_t shot_seed);

// Estimate -> event check -> train on K^ + lambda I -> test error. Never
// throws for a failed event; that is recorded as event_ok = false.
RunRecord run_trial(const ExperimentConfig& config, int trial);

struct CampaignSummary {
  uint64_t shots = 0;
  double hoeffding_bound = 0.0;
  bool hoeffding_vacuous = false;
  int trials = 0;
  int event_failures = 0;
  int successful = 0;
  double median_error = 0.0;
  double iqr_error = 0.0;
  double mean_remark1_bound = 0.0;
  double mean_theorem2_bound = 0.0;
  double mean_theorem2_regularizer = 0.0;
  double median_ratio = 0.0;
};

struct CampaignResult {
  ExperimentConfig config;
  std::vector<RunRecord> records;  // sorted by trial id
  CampaignSummary summary;
};

// Runs config.trials trials on config.threads workers; output order and
// values do not depend on the worker count.
CampaignResult run_campaign(const ExperimentConfig& config);

CampaignSummary summarize(const ExperimentConfig& config, const std::vector<RunRecord>& records);

// Linear-interpolated quantile (type 7); NaN for an empty sample.
double quantile(std::vector<double> values, double q);

}  // namespace qkernel::harness

#endif  // QKERNEL_HARNESS_CAMPAIGN_H_
