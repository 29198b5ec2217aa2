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

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "qkernel/simd/kernels.h"
#include "qkernel/simd/philox.h"

namespace qkernel::simd {
namespace {

using Words = PhiloxCounter;

// Known-answer vectors for Philox4x32-10 (Random123 reference values).
TEST(Philox, KnownAnswerZero) {
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}), (Words{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerPi) {
  EXPECT_EQ(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (Words{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, KnownAnswerCounterOne) {
  EXPECT_EQ(philox_block({0, 0}, 1), (Words{0xf8e4cca4, 0x5cb200db, 0xb1a574eb, 0x097eff67}));
}

TEST(Philox, KnownAnswerU64Key) {
  const PhiloxKey key = PhiloxKey::from_u64(0x0123456789abcdefULL);
  EXPECT_EQ(key.k0, 0x89abcdefu);
  EXPECT_EQ(key.k1, 0x01234567u);
  EXPECT_EQ(philox_block(key, 5), (Words{0x5765db8a, 0xd104608f, 0xc658b7d8, 0xe9aa137f}));
  EXPECT_EQ(philox_block(key, 6), (Words{0x5fca19f9, 0xfa9dd2ec, 0x3fd240cb, 0x9d3ab5e9}));
}

TEST(Philox, IsConstexpr) {
  static_assert(philox4x32({0, 0, 0, 0}, {0, 0})[0] == 0x6627e8d5u);
  static_assert(philox_word({0, 0}, 5) == 0x5cb200dbu);
}

uint64_t count_below_reference(PhiloxKey key, uint64_t first, uint64_t count, uint64_t threshold) {
  uint64_t n = 0;
  for (uint64_t k = first; k < first + count; ++k) n += philox_word(key, k) < threshold;
  return n;
}

TEST(ScalarKernels, CountBelowMatchesWordLoop) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const PhiloxKey key = PhiloxKey::from_u64(rng());
    const uint64_t first = rng() % 1000;
    const uint64_t count = rng() % 300;
    const uint64_t threshold = rng() % (kAlwaysBelow + 1);
    EXPECT_EQ(scalar::count_below(key, first, count, threshold),
              count_below_reference(key, first, count, threshold));
  }
}

TEST(ScalarKernels, CountBelowExtremes) {
  const PhiloxKey key{1, 2};
  EXPECT_EQ(scalar::count_below(key, 3, 1000, 0), 0u);
  EXPECT_EQ(scalar::count_below(key, 3, 1000, kAlwaysBelow), 1000u);
  EXPECT_EQ(scalar::count_below(key, 3, 0, kAlwaysBelow), 0u);
}

TEST(ScalarKernels, Dot) {
  const std::vector<double> a = {1, 2, 3, 4, 5};
  const std::vector<double> b = {0.5, -1, 2, 0, 1};
  EXPECT_DOUBLE_EQ(scalar::dot(a.data(), b.data(), a.size()), 9.5);
  EXPECT_DOUBLE_EQ(scalar::dot(a.data(), b.data(), 0), 0.0);
}

TEST(Dispatch, DotRejectsLengthMismatch) {
  const std::vector<double> a(3, 1.0);
  const std::vector<double> b(4, 1.0);
  EXPECT_THROW(dot(a, b), std::invalid_argument);
}

TEST(Dispatch, ScalarAlwaysSupported) {
  EXPECT_TRUE(isa_supported(Isa::kScalar));
  const Isa saved = active_isa();
  set_isa(Isa::kScalar);
  EXPECT_EQ(active_isa(), Isa::kScalar);
  set_isa(saved);
}

TEST(Dispatch, UnsupportedIsaThrows) {
  if (isa_supported(Isa::kAvx2)) GTEST_SKIP() << "AVX2 available";
  EXPECT_THROW(set_isa(Isa::kAvx2), std::invalid_argument);
}

#if QKERNEL_HAVE_AVX2

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!isa_supported(Isa::kAvx2)) GTEST_SKIP() << "CPU lacks AVX2";
  }
};

TEST_F(Avx2Equivalence, PhiloxLanesMatchScalarBlocks) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const PhiloxKey key = PhiloxKey::from_u64(rng());
    const uint64_t block = rng() >> 8;
    uint32_t out[32];
    avx2::philox_x8(key, block, out);
    for (int lane = 0; lane < 8; ++lane) {
      const Words w = philox_block(key, block + static_cast<uint64_t>(lane));
      for (int i = 0; i < 4; ++i) EXPECT_EQ(out[i * 8 + lane], w[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_F(Avx2Equivalence, CountBelowBitIdentical) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const PhiloxKey key = PhiloxKey::from_u64(rng());
    const uint64_t first = rng() % 4096;
    const uint64_t count = rng() % 5000;
    const uint64_t threshold = rng() % (kAlwaysBelow + 1);
    EXPECT_EQ(avx2::count_below(key, first, count, threshold), scalar::count_below(key, first, count, threshold));
  }
}

TEST_F(Avx2Equivalence, CountBelowAcrossLowWordWrap) {
  // Block counter crossing 2^32 carries into the second counter word.
  const PhiloxKey key{0xdeadbeef, 0x12345678};
  const uint64_t first = (uint64_t{1} << 34) - 100;
  for (uint64_t threshold : {uint64_t{0}, uint64_t{1} << 31, uint64_t{123456789}, kAlwaysBelow}) {
    EXPECT_EQ(avx2::count_below(key, first, 400, threshold), count_below_reference(key, first, 400, threshold));
  }
}

TEST_F(Avx2Equivalence, DotWithinRounding) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g;
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 15u, 16u, 33u, 1000u}) {
    std::vector<double> a(n), b(n);
    double mag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = g(rng);
      b[i] = g(rng);
      mag += std::abs(a[i] * b[i]);
    }
    const double s = scalar::dot(a.data(), b.data(), n);
    const double v = avx2::dot(a.data(), b.data(), n);
    EXPECT_LE(std::abs(s - v), 1e-14 * (1.0 + mag)) << "n=" << n;
  }
}

TEST_F(Avx2Equivalence, DispatcherFollowsSelection) {
  const Isa saved = active_isa();
  const PhiloxKey key{5, 6};
  set_isa(Isa::kScalar);
  const uint64_t s = count_below(key, 0, 10007, 1u << 30);
  set_isa(Isa::kAvx2);
  const uint64_t v = count_below(key, 0, 10007, 1u << 30);
  set_isa(saved);
  EXPECT_EQ(s, v);
}

#endif  // QKERNEL_HAVE_AVX2

}  // namespace
}  // namespace qkernel::simd
