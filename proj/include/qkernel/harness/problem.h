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

#ifndef QKERNEL_HARNESS_PROBLEM_H_
#define QKERNEL_HARNESS_PROBLEM_H_

#include <vector>

#include <Eigen/Dense>

#include "qkernel/harness/config.h"
#include "qkernel/kernel_matrix.h"
#include "qkernel/quantum.h"
#include "qkernel/random.h"

namespace qkernel::harness {

struct Problem {
  FeatureMapSpec spec;
  Observable observable;
  std::vector<std::vector<double>> inputs;  // x_i
  Eigen::VectorXd labels;                   // y_i = tr(rho_{x_i} O)
  KernelMatrix kernel;                      // K
  KernelMatrix noisy_kernel;                // K~ (closed form at config.p)
  double p = 0.0;
};

// The target observable of a campaign. Fixed by config.seed alone, so every
// trial of a campaign learns the same function.
Observable campaign_observable(const ExperimentConfig& config);

// Draws N inputs from `rng` (uniform on [-pi, pi]^n) and labels them with the
// campaign observable. The draws do not depend on p, lambda or m.
Problem generate_problem(const ExperimentConfig& config, Rng& rng);

}  // namespace qkernel::harness

#endif  // QKERNEL_HARNESS_PROBLEM_H_
