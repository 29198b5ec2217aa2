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

#include "qkernel/sampling.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qkernel/simd/kernels.h"

namespace qkernel {
namespace {

void require_overlap(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("SWAP test: overlap must lie in [0, 1], got " + std::to_string(t));
  }
}

// Converts a hit count into the shot mean for `mode`.
double shot_mean(uint64_t hits, uint64_t m, SwapTestMode mode) {
  const double k = static_cast<double>(hits);
  const double n = static_cast<double>(m);
  if (mode == SwapTestMode::kIdealized) return k / n;
  return (2.0 * k - n) / n;
}

}  // namespace

std::string_view to_string(SwapTestMode m) {
  return m == SwapTestMode::kIdealized ? "idealized" : "physical";
}

SwapTestMode parse_swap_mode(std::string_view s) {
  if (s == "idealized") return SwapTestMode::kIdealized;
  if (s == "physical") return SwapTestMode::kPhysical;
  throw std::invalid_argument("unknown swap mode: " + std::string(s));
}

double shot_range(SwapTestMode mode) { return mode == SwapTestMode::kIdealized ? 1.0 : 2.0; }

double accept_probability(double t, const ShotModel& model) {
  const double mean = t + model.bias;
  const double p = model.mode == SwapTestMode::kIdealized ? mean : 0.5 * (1.0 + mean);
  return std::clamp(p, 0.0, 1.0);
}

uint64_t accept_threshold(double t, const ShotModel& model) {
  const double p = accept_probability(t, model);
  return static_cast<uint64_t>(std::nearbyint(std::ldexp(p, 32)));
}

double swap_test_shot(double t, const ShotModel& model, ShotStream& stream) {
  require_overlap(t);
  const bool accept = stream.next_word() < accept_threshold(t, model);
  if (model.mode == SwapTestMode::kIdealized) return accept ? 1.0 : 0.0;
  return accept ? 1.0 : -1.0;
}

double estimate_entry(double t, uint64_t m, const ShotModel& model, ShotStream& stream) {
  require_overlap(t);
  if (m == 0) throw std::invalid_argument("estimate_entry: m must be >= 1");
  const uint64_t first = stream.take(m);
  const uint64_t hits = simd::count_below(stream.key(), first, m, accept_threshold(t, model));
  return shot_mean(hits, m, model.mode);
}

EstimatedKernel estimate_kernel(const KernelMatrix& k_tilde, uint64_t m, const ShotModel& model,
                                uint64_t seed, int threads) {
  const Eigen::Index n = k_tilde.size();
  if (n < 1) throw std::invalid_argument("estimate_kernel: empty kernel");
  if (m == 0) throw std::invalid_argument("estimate_kernel: m must be >= 1");
  if (k_tilde.matrix().minCoeff() < 0.0 || k_tilde.matrix().maxCoeff() > 1.0) {
    throw std::invalid_argument("estimate_kernel: entries must lie in [0, 1]");
  }

  Eigen::MatrixXd out(n, n);
  auto fill_row = [&](Eigen::Index i) {
    for (Eigen::Index j = i; j < n; ++j) {
      ShotStream stream(derive_seed(seed, StreamDomain::kKernelEntry, static_cast<uint64_t>(i),
                                    static_cast<uint64_t>(j)));
      out(i, j) = estimate_entry(k_tilde(i, j), m, model, stream);
    }
  };

  const int workers = std::clamp<int>(threads, 1, static_cast<int>(n));
  if (workers == 1) {
    for (Eigen::Index i = 0; i < n; ++i) fill_row(i);
  } else {
    std::atomic<Eigen::Index> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (Eigen::Index i; (i = next.fetch_add(1)) < n;) fill_row(i);
      });
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) out(i, j) = out(j, i);
  }
  return {KernelMatrix(std::move(out)), m, model.mode, seed};
}

Eigen::VectorXd estimate_test_row(std::span<const double> t_row, uint64_t m, const ShotModel& model,
                                  ShotStream& stream) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(t_row.size()));
  for (std::size_t j = 0; j < t_row.size(); ++j) {
    out(static_cast<Eigen::Index>(j)) = estimate_entry(t_row[j], m, model, stream);
  }
  return out;
}

}  // namespace qkernel
