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

#include <set>

#include <gtest/gtest.h>

#include "qkernel/random.h"

namespace qkernel {
namespace {

TEST(SplitMix, ReferenceSequence) {
  // First outputs of the reference splitmix64 generator seeded with 0.
  uint64_t state = 0;
  auto next = [&] {
    const uint64_t out = splitmix64(state);
    state += 0x9e3779b97f4a7c15ULL;
    return out;
  };
  EXPECT_EQ(next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(next(), 0x06c45d188009454fULL);
}

TEST(DeriveSeed, DistinctAcrossDomainsAndIndices) {
  std::set<uint64_t> seen;
  for (uint64_t d = 1; d <= 8; ++d) {
    for (uint64_t a = 0; a < 20; ++a) {
      for (uint64_t b = 0; b < 20; ++b) seen.insert(derive_seed(42, static_cast<StreamDomain>(d), a, b));
    }
  }
  EXPECT_EQ(seen.size(), 8u * 20u * 20u);
}

TEST(DeriveSeed, OrderOfIndicesMatters) {
  EXPECT_NE(derive_seed(1, StreamDomain::kKernelEntry, 2, 3), derive_seed(1, StreamDomain::kKernelEntry, 3, 2));
}

TEST(DeriveSeed, Deterministic) {
  EXPECT_EQ(derive_seed(9, StreamDomain::kTrial, 4), derive_seed(9, StreamDomain::kTrial, 4));
}

TEST(ShotStream, WordsFollowCounter) {
  ShotStream s(0x0123456789abcdefULL);
  const auto key = s.key();
  for (uint64_t k = 0; k < 10; ++k) EXPECT_EQ(s.next_word(), simd::philox_word(key, k));
  EXPECT_EQ(s.position(), 10u);
  EXPECT_EQ(s.take(5), 10u);
  EXPECT_EQ(s.position(), 15u);
}

}  // namespace
}  // namespace qkernel
