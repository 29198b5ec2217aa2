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

#include "qkernel/harness/problem.h"

namespace qkernel::harness {

Observable campaign_observable(const ExperimentConfig& config) {
  Rng rng(derive_seed(config.seed, StreamDomain::kObservable));
  return random_observable(rng, config.feature_map().dim());
}

Problem generate_problem(const ExperimentConfig& config, Rng& rng) {
  config.validate();
  const FeatureMapSpec spec = config.feature_map();
  Observable o = campaign_observable(config);

  std::vector<std::vector<double>> inputs;
  std::vector<DensityMatrix> states;
  inputs.reserve(config.n_train);
  states.reserve(config.n_train);
  Eigen::VectorXd labels(config.n_train);
  for (int i = 0; i < config.n_train; ++i) {
    inputs.push_back(draw_input(rng, spec.qubits));
    states.push_back(encode(inputs.back(), spec));
    labels(i) = expectation(states.back(), o);
  }
  KernelMatrix k = gram_matrix(states);
  KernelMatrix k_tilde = noisy_kernel_closed_form(k, config.p, spec.dim());
  return Problem{spec, std::move(o), std::move(inputs), std::move(labels), std::move(k), std::move(k_tilde),
                 config.p};
}

}  // namespace qkernel::harness
