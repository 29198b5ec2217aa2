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

#ifndef QKERNEL_LEARNING_H_
#define QKERNEL_LEARNING_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qkernel/kernel_matrix.h"
#include "qkernel/quantum.h"
#include "qkernel/sampling.h"

namespace qkernel {

// Which kernel the model was trained on.
enum class KernelSource { kExact, kClosedFormNoisy, kShotEstimated };

// How k(x, x_j) is produced for a fresh x at test time.
//   kExactRow:         tr(rho_x rho_j)
//   kNoisyExactRow:    tr(rho~_x rho~_j)
//   kShotEstimatedRow: m-shot SWAP-test estimate of tr(rho~_x rho~_j)
enum class TestEval { kExactRow, kNoisyExactRow, kShotEstimatedRow };

std::string_view to_string(KernelSource s);
std::string_view to_string(TestEval e);
KernelSource parse_kernel_source(std::string_view s);
TestEval parse_test_eval(std::string_view s);

// What a model needs to evaluate itself on fresh inputs. Carries no noise
// parameter: training never sees p.
struct TrainingContext {
  std::vector<std::vector<double>> points;
  FeatureMapSpec spec;
  KernelSource kernel_source = KernelSource::kShotEstimated;
  TestEval test_eval = TestEval::kShotEstimatedRow;
};

// Dual form of the regularized least-squares solution:
// h(x) = clip(sum_j alpha_j k(x, x_j)), alpha = (kernel + lambda I)^-1 y.
struct TrainedModel {
  Eigen::VectorXd alpha;
  double lambda = 0.0;
  TrainingContext context;
};

// alpha = (kernel + lambda I)^-1 y. Requires lambda > 0 and |y_i| <= 1.
// Throws NotPositiveDefinite when kernel + lambda I is not positive definite.
TrainedModel train(const KernelMatrix& kernel, const Eigen::VectorXd& y, double lambda,
                   TrainingContext context = {});

double clip(double v);

// clip(alpha . k_row).
double predict(const TrainedModel& model, std::span<const double> k_row);

struct GeneralizationOptions {
  ShotModel shots;        // only for kShotEstimatedRow
  int threads = 1;
};

// Monte Carlo estimate of E_x |h(x) - tr(rho_x O)| over `test_points` fresh
// inputs. Test point k uses streams derived from (seed, k), so the value does
// not depend on `threads`. p and m describe the device used for test-time
// kernel rows (m ignored unless kShotEstimatedRow).
double generalization_error(const TrainedModel& model, const Observable& o, const FeatureMapSpec& spec,
                            int test_points, uint64_t seed, double p, uint64_t m,
                            const GeneralizationOptions& options = {});

}  // namespace qkernel

#endif  // QKERNEL_LEARNING_H_
