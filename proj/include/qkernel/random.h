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

#ifndef QKERNEL_RANDOM_H_
#define QKERNEL_RANDOM_H_

#include <cstdint>
#include <random>

#include "qkernel/simd/philox.h"

namespace qkernel {

// General-purpose generator for data, observables and test points.
using Rng = std::mt19937_64;

// Stream domains keep seeds derived for different purposes disjoint.
enum class StreamDomain : uint64_t {
  kKernelEntry = 1,
  kTestRow = 2,
  kTrial = 3,
  kProblem = 4,
  kObservable = 5,
  kTestPoint = 6,
  kShots = 7,
  kSuite = 8,
};

uint64_t splitmix64(uint64_t x);

// Hash of (seed, domain, a, b) used as a child seed or Philox key.
uint64_t derive_seed(uint64_t seed, StreamDomain domain, uint64_t a = 0, uint64_t b = 0);

// A sequential view over one Philox stream. Copyable; copies replay the same words.
class ShotStream {
 public:
  explicit ShotStream(uint64_t key, uint64_t position = 0)
      : key_(simd::PhiloxKey::from_u64(key)), position_(position) {}

  simd::PhiloxKey key() const { return key_; }
  uint64_t position() const { return position_; }

  uint32_t next_word() { return simd::philox_word(key_, position_++); }

  // Claims the next `count` words and returns the index of the first.
  uint64_t take(uint64_t count) {
    const uint64_t first = position_;
    position_ += count;
    return first;
  }

 private:
  simd::PhiloxKey key_;
  uint64_t position_;
};

}  // namespace qkernel

#endif  // QKERNEL_RANDOM_H_
