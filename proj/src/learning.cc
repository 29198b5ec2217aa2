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

#include "qkernel/learning.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "qkernel/linalg.h"
#include "qkernel/simd/kernels.h"

namespace qkernel {

std::string_view to_string(KernelSource s) {
  switch (s) {
    case KernelSource::kExact:
      return "exact";
    case KernelSource::kClosedFormNoisy:
      return "closed_form_noisy";
    case KernelSource::kShotEstimated:
      return "shot_estimated";
  }
  return "unknown";
}

std::string_view to_string(TestEval e) {
  switch (e) {
    case TestEval::kExactRow:
      return "exact_row";
    case TestEval::kNoisyExactRow:
      return "noisy_exact_row";
    case TestEval::kShotEstimatedRow:
      return "shot_estimated_row";
  }
  return "unknown";
}

KernelSource parse_kernel_source(std::string_view s) {
  if (s == "exact") return KernelSource::kExact;
  if (s == "closed_form_noisy") return KernelSource::kClosedFormNoisy;
  if (s == "shot_estimated") return KernelSource::kShotEstimated;
  throw std::invalid_argument("unknown kernel source: " + std::string(s));
}

TestEval parse_test_eval(std::string_view s) {
  if (s == "exact_row") return TestEval::kExactRow;
  if (s == "noisy_exact_row") return TestEval::kNoisyExactRow;
  if (s == "shot_estimated_row") return TestEval::kShotEstimatedRow;
  throw std::invalid_argument("unknown test eval mode: " + std::string(s));
}

TrainedModel train(const KernelMatrix& kernel, const Eigen::VectorXd& y, double lambda,
                   TrainingContext context) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("train: lambda must be > 0");
  if (y.size() != kernel.size()) throw std::invalid_argument("train: label count does not match kernel size");
  if (y.size() > 0 && y.cwiseAbs().maxCoeff() > 1.0) throw std::invalid_argument("train: labels must satisfy |y_i| <= 1");
  if (!context.points.empty() && static_cast<Eigen::Index>(context.points.size()) != y.size()) {
    throw std::invalid_argument("train: training point count does not match kernel size");
  }
  TrainedModel model;
  model.alpha = solve_spd(kernel.shifted(lambda), y);
  model.lambda = lambda;
  model.context = std::move(context);
  return model;
}

double clip(double v) { return std::min(1.0, std::max(-1.0, v)); }

double predict(const TrainedModel& model, std::span<const double> k_row) {
  if (static_cast<Eigen::Index>(k_row.size()) != model.alpha.size()) {
    throw std::invalid_argument("predict: kernel row length does not match model");
  }
  const std::span<const double> alpha(model.alpha.data(), static_cast<std::size_t>(model.alpha.size()));
  return clip(simd::dot(alpha, k_row));
}

double generalization_error(const TrainedModel& model, const Observable& o, const FeatureMapSpec& spec,
                            int test_points, uint64_t seed, double p, uint64_t m,
                            const GeneralizationOptions& options) {
  if (test_points < 1) throw std::invalid_argument("generalization_error: need at least one test point");
  const auto& ctx = model.context;
  if (static_cast<Eigen::Index>(ctx.points.size()) != model.alpha.size()) {
    throw std::invalid_argument("generalization_error: model carries no training points");
  }
  if (ctx.spec.qubits != spec.qubits || ctx.spec.kind != spec.kind) {
    throw std::invalid_argument("generalization_error: feature map differs from the training one");
  }
  if (o.dim() != spec.dim()) throw std::invalid_argument("generalization_error: observable dimension mismatch");
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("generalization_error: p must be in [0, 1)");
  if (ctx.test_eval == TestEval::kShotEstimatedRow && m == 0) {
    throw std::invalid_argument("generalization_error: shot-estimated rows need m >= 1");
  }

  const bool noisy = ctx.test_eval != TestEval::kExactRow;
  std::vector<DensityMatrix> train_states;
  train_states.reserve(ctx.points.size());
  for (const auto& x : ctx.points) {
    DensityMatrix rho = encode(x, spec);
    train_states.push_back(noisy ? depolarize(rho, p) : std::move(rho));
  }

  const std::size_t n = train_states.size();
  std::vector<double> errors(static_cast<std::size_t>(test_points));
  auto evaluate = [&](int k) {
    Rng rng(derive_seed(seed, StreamDomain::kTestPoint, static_cast<uint64_t>(k)));
    const std::vector<double> x = draw_input(rng, spec.qubits);
    const DensityMatrix rho = encode(x, spec);
    const double target = expectation(rho, o);
    const DensityMatrix probe = noisy ? depolarize(rho, p) : rho;

    std::vector<double> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = hs_inner(probe, train_states[j]);
    double h;
    if (ctx.test_eval == TestEval::kShotEstimatedRow) {
      ShotStream stream(derive_seed(seed, StreamDomain::kTestRow, static_cast<uint64_t>(k)));
      const Eigen::VectorXd est = estimate_test_row(row, m, options.shots, stream);
      h = predict(model, std::span<const double>(est.data(), n));
    } else {
      h = predict(model, row);
    }
    errors[static_cast<std::size_t>(k)] = std::abs(h - target);
  };

  const int workers = std::clamp(options.threads, 1, test_points);
  if (workers == 1) {
    for (int k = 0; k < test_points; ++k) evaluate(k);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int k; (k = next.fetch_add(1)) < test_points;) evaluate(k);
      });
    }
  }

  double sum = 0.0;
  for (double e : errors) sum += e;
  return sum / static_cast<double>(test_points);
}

}  // namespace qkernel
