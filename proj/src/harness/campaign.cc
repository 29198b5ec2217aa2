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

#include "qkernel/harness/campaign.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "qkernel/bounds.h"
#include "qkernel/learning.h"
#include "qkernel/linalg.h"
#include "qkernel/sampling.h"

namespace qkernel::harness {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return kNaN;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

uint64_t trial_seed(const ExperimentConfig& config, int trial) {
  return derive_seed(config.seed, StreamDomain::kTrial, static_cast<uint64_t>(trial));
}

KernelMatrix training_kernel(const ExperimentConfig& config, const Problem& problem, uint64_t shot_seed) {
  switch (config.kernel_source) {
    case KernelSource::kExact:
      return problem.kernel;
    case KernelSource::kClosedFormNoisy:
      return problem.noisy_kernel;
    case KernelSource::kShotEstimated:
      break;
  }
  return estimate_kernel(problem.noisy_kernel, config.shots(), config.shot_model(), shot_seed).entries;
}

RunRecord run_trial(const ExperimentConfig& config, int trial) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.trial = trial;
  rec.seed = trial_seed(config, trial);

  Rng data_rng(derive_seed(rec.seed, StreamDomain::kProblem));
  const Problem problem = generate_problem(config, data_rng);
  const int n = config.n_train;

  const KernelMatrix k_hat = training_kernel(config, problem, derive_seed(rec.seed, StreamDomain::kShots));
  const double shift = config.kernel_shift();

  rec.min_eig_khat = min_eig(k_hat);
  rec.max_abs_dev = (k_hat.matrix() - problem.noisy_kernel.matrix()).cwiseAbs().maxCoeff();
  const BoundReport t2 = theorem2_rhs(problem.labels, problem.kernel, config.lambda, config.p, config.delta, n);
  rec.theorem2_bound = t2.total;
  rec.theorem2_regularizer = t2.term_regularizer;

  rec.event_ok = shift_event(k_hat, problem.noisy_kernel, shift);
  if (rec.event_ok) {
    // W = K^ + shift I is a valid kernel matrix; train with regularization
    // lambda/2, so the solve is (K^ + (shift + lambda/2) I)^-1 y.
    const KernelMatrix w = k_hat.shifted(shift);
    const double reg = config.lambda / 2.0;
    try {
      TrainingContext ctx{problem.inputs, problem.spec, config.kernel_source, config.test_eval};
      const TrainedModel model = train(w, problem.labels, reg, std::move(ctx));
      rec.remark1_bound = remark1_rhs(problem.labels, w, reg, config.delta, n).total;
      GeneralizationOptions opts;
      opts.shots = config.shot_model();
      const double err = generalization_error(model, problem.observable, problem.spec, config.n_test,
                                              derive_seed(rec.seed, StreamDomain::kTestPoint), config.p,
                                              config.shots_per_test_entry(), opts);
      rec.empirical_error = err;
      rec.error_to_bound_ratio = err / rec.theorem2_bound;
    } catch (const NotPositiveDefinite&) {
      rec.event_ok = false;
      rec.empirical_error.reset();
      rec.remark1_bound.reset();
      rec.error_to_bound_ratio.reset();
    }
  }
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) return kNaN;
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

CampaignSummary summarize(const ExperimentConfig& config, const std::vector<RunRecord>& records) {
  CampaignSummary s;
  s.shots = config.shots();
  s.hoeffding_bound = hoeffding_failure_bound(config.n_train, config.lambda, static_cast<double>(s.shots));
  s.hoeffding_vacuous = is_vacuous(s.hoeffding_bound);
  s.trials = static_cast<int>(records.size());
  std::vector<double> errors, ratios, remark1, theorem2, regularizer;
  for (const RunRecord& r : records) {
    if (!r.event_ok) ++s.event_failures;
    if (r.empirical_error) errors.push_back(*r.empirical_error);
    if (r.error_to_bound_ratio) ratios.push_back(*r.error_to_bound_ratio);
    if (r.remark1_bound) remark1.push_back(*r.remark1_bound);
    theorem2.push_back(r.theorem2_bound);
    regularizer.push_back(r.theorem2_regularizer);
  }
  s.successful = static_cast<int>(errors.size());
  s.median_error = quantile(errors, 0.5);
  s.iqr_error = quantile(errors, 0.75) - quantile(errors, 0.25);
  s.mean_remark1_bound = mean_of(remark1);
  s.mean_theorem2_bound = mean_of(theorem2);
  s.mean_theorem2_regularizer = mean_of(regularizer);
  s.median_ratio = quantile(ratios, 0.5);
  return s;
}

CampaignResult run_campaign(const ExperimentConfig& config) {
  config.validate();
  std::vector<RunRecord> records(static_cast<std::size_t>(config.trials));
  const int workers = std::clamp(config.threads, 1, config.trials);
  if (workers == 1) {
    for (int t = 0; t < config.trials; ++t) records[static_cast<std::size_t>(t)] = run_trial(config, t);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int t; (t = next.fetch_add(1)) < config.trials;) {
          records[static_cast<std::size_t>(t)] = run_trial(config, t);
        }
      });
    }
  }
  CampaignResult result{config, std::move(records), {}};
  result.summary = summarize(config, result.records);
  return result;
}

}  // namespace qkernel::harness
