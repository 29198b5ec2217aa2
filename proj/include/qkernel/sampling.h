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

#ifndef QKERNEL_SAMPLING_H_
#define QKERNEL_SAMPLING_H_

#include <cstdint>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "qkernel/kernel_matrix.h"
#include "qkernel/random.h"

namespace qkernel {

// Idealized: a shot is Bernoulli(t) in {0, 1}.
// Physical: the ancilla accepts with probability (1 + t)/2 and the shot is
// reported as +1/-1. Both are unbiased for t.
enum class SwapTestMode { kIdealized, kPhysical };

std::string_view to_string(SwapTestMode m);
SwapTestMode parse_swap_mode(std::string_view s);

// Shot model. `bias` shifts the expectation of every shot by a constant and
// exists only for negative-control runs; it is zero everywhere else.
struct ShotModel {
  SwapTestMode mode = SwapTestMode::kIdealized;
  double bias = 0.0;

  ShotModel() = default;
  ShotModel(SwapTestMode m) : mode(m) {}  // NOLINT(google-explicit-constructor)
  ShotModel(SwapTestMode m, double b) : mode(m), bias(b) {}
};

// Largest |t - shot| over the shot range of `mode`: 1 Idealized, 2 Physical.
double shot_range(SwapTestMode mode);

// P(raw outcome bit = 1) for overlap t, clamped to [0, 1].
double accept_probability(double t, const ShotModel& model);

// 32-bit threshold for accept_probability: a word w counts as 1 iff w < threshold.
uint64_t accept_threshold(double t, const ShotModel& model);

// One SWAP-test outcome; consumes one word of `stream`.
double swap_test_shot(double t, const ShotModel& model, ShotStream& stream);

// Mean of m shots; consumes m words. Equal, bit for bit, to the mean of m
// successive swap_test_shot calls on the same stream.
double estimate_entry(double t, uint64_t m, const ShotModel& model, ShotStream& stream);

struct EstimatedKernel {
  KernelMatrix entries;
  uint64_t shots = 0;
  SwapTestMode mode = SwapTestMode::kIdealized;
  uint64_t seed = 0;
};

// Entry (i, j), i <= j, is estimate_entry(K~_ij, m) on the stream keyed by
// (seed, i, j) and mirrored. Diagonals are estimated too. The result does
// not depend on evaluation order or on `threads`.
EstimatedKernel estimate_kernel(const KernelMatrix& k_tilde, uint64_t m, const ShotModel& model,
                                uint64_t seed, int threads = 1);

// Independent m-shot estimates of each coordinate, drawn sequentially from `stream`.
Eigen::VectorXd estimate_test_row(std::span<const double> t_row, uint64_t m, const ShotModel& model,
                                  ShotStream& stream);

}  // namespace qkernel

#endif  // QKERNEL_SAMPLING_H_
