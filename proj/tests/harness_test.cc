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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qkernel/bounds.h"
#include "qkernel/harness/campaign.h"
#include "qkernel/harness/config.h"
#include "qkernel/harness/io.h"
#include "qkernel/harness/problem.h"
#include "qkernel/harness/sweep.h"
#include "qkernel/harness/verify.h"
#include "qkernel/linalg.h"

namespace qkernel::harness {
namespace {

using nlohmann::json;

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n_train = 8;
  c.n_test = 200;
  c.trials = 6;
  c.p = 0.2;
  return c;
}

TEST(Config, DefaultsValidate) {
  ExperimentConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.shots(), static_cast<uint64_t>(std::ceil(m_threshold(32, 1.0, 0.1))));
  EXPECT_EQ(c.kernel_shift(), 0.5);
}

TEST(Config, RejectsUnknownKey) {
  EXPECT_THROW(config_from_json(json::parse(R"({"N": 8, "lamda": 1})")), ConfigError);
}

TEST(Config, RejectsBadValues) {
  EXPECT_THROW(config_from_json(json::parse(R"({"p": 1.0})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"lambda": 0})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"qubits": 11})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"m": 0})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"m": 2.5})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"encoding": "amplitude"})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"N": "eight"})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse("[1, 2]")), ConfigError);
}

TEST(Config, ShotBudgetGuard) {
  EXPECT_THROW(config_from_json(json::parse(R"({"N": 64, "m": 10000000, "trials": 20})")), ConfigError);
  EXPECT_NO_THROW(config_from_json(json::parse(R"({"N": 64, "m": 1000, "trials": 20})")));
}

TEST(Config, ExplicitShotsDisableAuto) {
  const ExperimentConfig c = config_from_json(json::parse(R"({"m": 500})"));
  EXPECT_FALSE(c.m_auto);
  EXPECT_EQ(c.shots(), 500u);
  EXPECT_EQ(c.shots_per_test_entry(), 500u);
}

TEST(Config, JsonRoundTrip) {
  ExperimentConfig c = small_config();
  c.m_auto = false;
  c.m = 77;
  c.test_shots = 33;
  c.swap_mode = SwapTestMode::kPhysical;
  c.fault = Fault::kBiasedSampler;
  const ExperimentConfig back = config_from_json(json::parse(to_json(c).dump()));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_EQ(back.shot_model().bias, kInjectedBias);
}

TEST(Config, DisableShiftFault) {
  ExperimentConfig c;
  c.fault = Fault::kDisableShift;
  EXPECT_EQ(c.kernel_shift(), 0.0);
  EXPECT_THROW(parse_fault("explode"), ConfigError);
}

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(std::nan("")), "");
}

TEST(Csv, FrozenHeaders) {
  EXPECT_STREQ(kRunCsvHeader,
               "trial,seed,event_ok,empirical_error,remark1_bound,theorem2_bound,theorem2_regularizer,"
               "error_to_bound_ratio,min_eig_Khat,max_abs_dev");
  const std::string csv = runs_to_csv({});
  EXPECT_EQ(csv, std::string(kRunCsvHeader) + "\n");
}

TEST(Quantile, LinearInterpolation) {
  EXPECT_DOUBLE_EQ(quantile({1, 2, 3, 4}, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile({1, 2, 3, 4}, 0.25), 1.75);
  EXPECT_DOUBLE_EQ(quantile({5}, 0.75), 5.0);
  EXPECT_TRUE(std::isnan(quantile({}, 0.5)));
}

TEST(Problem, SingleTrainingPoint) {
  ExperimentConfig c = small_config();
  c.n_train = 1;
  Rng rng(1);
  const Problem p = generate_problem(c, rng);
  EXPECT_NEAR(p.kernel(0, 0), 1.0, 1e-15);
}

TEST(Problem, NoiselessNoisyKernelIsExact) {
  ExperimentConfig c = small_config();
  c.p = 0.0;
  Rng rng(2);
  const Problem p = generate_problem(c, rng);
  EXPECT_EQ(p.noisy_kernel, p.kernel);
}

TEST(Problem, LabelsBoundedAndKernelPsd) {
  for (uint64_t s = 0; s < 10; ++s) {
    ExperimentConfig c = small_config();
    c.seed = s;
    Rng rng(s);
    const Problem p = generate_problem(c, rng);
    EXPECT_LE(p.labels.cwiseAbs().maxCoeff(), 1.0);
    EXPECT_GE(min_eig(p.kernel), -1e-12);
  }
}

TEST(Problem, JsonRoundTrip) {
  const ExperimentConfig c = small_config();
  Rng rng(3);
  const Problem p = generate_problem(c, rng);
  ExperimentConfig c2;
  const Problem back = problem_from_json(json::parse(problem_to_json(c, p).dump()), &c2);
  EXPECT_EQ(back.kernel, p.kernel);
  EXPECT_EQ(back.noisy_kernel, p.noisy_kernel);
  EXPECT_EQ(back.labels, p.labels);
  EXPECT_EQ(back.inputs, p.inputs);
  EXPECT_EQ(back.observable.matrix(), p.observable.matrix());
  EXPECT_EQ(to_json(c2), to_json(c));
}

TEST(Problem, MalformedFileIsIoError) {
  EXPECT_THROW(problem_from_json(json::parse(R"({"config": {}})")), IoError);
}

TEST(Campaign, DeterministicRecords) {
  const ExperimentConfig c = small_config();
  const RunRecord a = run_trial(c, 2);
  const RunRecord b = run_trial(c, 2);
  EXPECT_EQ(runs_to_csv({a}), runs_to_csv({b}));
}

TEST(Campaign, ByteIdenticalCsvAcrossRunsAndThreads) {
  ExperimentConfig c = small_config();
  const std::string first = runs_to_csv(run_campaign(c).records);
  EXPECT_EQ(first, runs_to_csv(run_campaign(c).records));
  c.threads = 4;
  EXPECT_EQ(first, runs_to_csv(run_campaign(c).records));
}

TEST(Campaign, TinyShotCountStaysWellFormed) {
  ExperimentConfig c = small_config();
  c.n_train = 64;
  c.lambda = 0.01;
  c.m_auto = false;
  c.m = 1;
  c.trials = 5;
  c.n_test = 50;
  const CampaignResult r = run_campaign(c);
  EXPECT_TRUE(r.summary.hoeffding_vacuous);
  EXPECT_EQ(r.summary.event_failures, 5);
  for (const RunRecord& rec : r.records) {
    EXPECT_FALSE(rec.event_ok);
    EXPECT_FALSE(rec.empirical_error.has_value());
    EXPECT_TRUE(std::isfinite(rec.theorem2_bound));
  }
  std::istringstream csv(runs_to_csv(r.records));
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 9);
    ++lines;
  }
  EXPECT_EQ(lines, 6);
}

TEST(Campaign, NoiselessEventFrequency) {
  ExperimentConfig c = small_config();
  c.p = 0.0;
  c.trials = 200;
  c.n_test = 20;
  c.test_eval = TestEval::kExactRow;
  const CampaignResult r = run_campaign(c);
  const double bound = r.summary.hoeffding_bound;
  const double rate = static_cast<double>(r.summary.event_failures) / c.trials;
  EXPECT_LE(rate, bound + 3.0 * std::sqrt(bound * (1 - bound) / c.trials));
  EXPECT_GE(1.0 - rate, 1.0 - c.delta);
}

TEST(Campaign, ObservableSharedAcrossTrials) {
  const ExperimentConfig c = small_config();
  EXPECT_EQ(campaign_observable(c).matrix(), campaign_observable(c).matrix());
  ExperimentConfig other = c;
  other.seed = c.seed + 1;
  EXPECT_NE(campaign_observable(c).matrix(), campaign_observable(other).matrix());
}

TEST(Sweep, RejectsUnsortedAndBadAxis) {
  const ExperimentConfig c = small_config();
  EXPECT_THROW(sweep(c, SweepAxis::kNoise, {0.3, 0.1}), ConfigError);
  EXPECT_THROW(sweep(c, SweepAxis::kShots, {1.5}), ConfigError);
  EXPECT_THROW(parse_axis("q"), ConfigError);
}

TEST(Sweep, NoiselessPointMatchesDirectCampaign) {
  ExperimentConfig c = small_config();
  c.trials = 3;
  const auto rows = sweep(c, SweepAxis::kNoise, {0.0});
  ExperimentConfig direct = c;
  direct.p = 0.0;
  const CampaignSummary s = run_campaign(direct).summary;
  EXPECT_EQ(rows[0].summary.median_error, s.median_error);
  EXPECT_EQ(rows[0].summary.mean_theorem2_bound, s.mean_theorem2_bound);
}

TEST(Sweep, Theorem2RegularizerScalesWithNoise) {
  ExperimentConfig c = small_config();
  c.trials = 4;
  c.test_eval = TestEval::kExactRow;
  const auto rows = sweep(c, SweepAxis::kNoise, {0.0, 0.3, 0.6});
  const double base = rows[0].summary.mean_theorem2_regularizer;
  for (const SweepRow& r : rows) {
    EXPECT_NEAR(r.summary.mean_theorem2_regularizer * (1.0 - r.value) / base, 1.0, 1e-12);
  }
  std::istringstream csv(sweep_to_csv(rows));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, kSweepCsvHeader);
}

TEST(TrendRule, Cases) {
  EXPECT_TRUE(non_increasing_with_one_inversion({3, 2, 1}, {0.1, 0.1, 0.1}));
  EXPECT_TRUE(non_increasing_with_one_inversion({3, 3.05, 1}, {0.1, 0.1, 0.1}));
  EXPECT_FALSE(non_increasing_with_one_inversion({3, 3.5, 1}, {0.1, 0.1, 0.1}));
  EXPECT_FALSE(non_increasing_with_one_inversion({1, 1.01, 1.02}, {0.1, 0.1, 0.1}));
  EXPECT_FALSE(non_increasing_with_one_inversion({1, std::nan(""), 0.5}, {0.1, 0.1, 0.1}));
}

class VerifySuite : public ::testing::Test {
 protected:
  static ExperimentConfig with_fault(Fault f) {
    ExperimentConfig c;
    c.fault = f;
    return c;
  }
};

TEST_F(VerifySuite, FastChecksPassByDefault) {
  const VerifyReport r = verify_suite(ExperimentConfig{}, {.skip_slow = true});
  for (const CheckResult& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.metrics.dump();
  EXPECT_TRUE(r.passed());
  const auto j = report_to_json(r);
  EXPECT_EQ(j["checks"].size(), r.checks.size());
}

TEST_F(VerifySuite, DisabledShiftBreaksEventAndSandwich) {
  const ExperimentConfig c = with_fault(Fault::kDisableShift);
  EXPECT_FALSE(check_hoeffding_event_frequency(c).passed);
  EXPECT_FALSE(check_sandwich_chain(c).passed);
  EXPECT_TRUE(check_estimator_unbiasedness(c).passed);
}

TEST_F(VerifySuite, BiasedSamplerBreaksUnbiasedness) {
  const ExperimentConfig c = with_fault(Fault::kBiasedSampler);
  EXPECT_FALSE(check_estimator_unbiasedness(c).passed);
  EXPECT_TRUE(check_noisy_kernel_factorization(c).passed);
}

TEST_F(VerifySuite, ExactChecksIndependentOfFault) {
  for (Fault f : {Fault::kNone, Fault::kDisableShift, Fault::kBiasedSampler}) {
    EXPECT_TRUE(check_threshold_inversion(with_fault(f)).passed);
    EXPECT_TRUE(check_remark1_algebra(with_fault(f)).passed);
  }
}

}  // namespace
}  // namespace qkernel::harness
