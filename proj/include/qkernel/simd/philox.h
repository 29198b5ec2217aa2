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

#ifndef QKERNEL_SIMD_PHILOX_H_
#define QKERNEL_SIMD_PHILOX_H_

#include <array>
#include <cstdint>

namespace qkernel::simd {

// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
// A counter-based generator: output block b of stream `key` is a pure function
// of (key, b), so any subrange of a stream can be produced independently.

struct PhiloxKey {
  uint32_t k0 = 0;
  uint32_t k1 = 0;

  static constexpr PhiloxKey from_u64(uint64_t k) {
    return {static_cast<uint32_t>(k), static_cast<uint32_t>(k >> 32)};
  }
};

using PhiloxCounter = std::array<uint32_t, 4>;

inline constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;
inline constexpr int kPhiloxRounds = 10;

constexpr PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key) {
  for (int r = 0; r < kPhiloxRounds; ++r) {
    if (r > 0) {
      key.k0 += kPhiloxW0;
      key.k1 += kPhiloxW1;
    }
    const uint64_t p0 = uint64_t{kPhiloxM0} * ctr[0];
    const uint64_t p1 = uint64_t{kPhiloxM1} * ctr[2];
    const auto hi0 = static_cast<uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<uint32_t>(p0);
    const auto hi1 = static_cast<uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key.k0, lo1, hi0 ^ ctr[3] ^ key.k1, lo0};
  }
  return ctr;
}

// Block b of a stream uses counter (lo32(b), hi32(b), 0, 0).
constexpr PhiloxCounter philox_block(PhiloxKey key, uint64_t block) {
  return philox4x32({static_cast<uint32_t>(block), static_cast<uint32_t>(block >> 32), 0u, 0u},
                    key);
}

// The k-th 32-bit word of a stream.
constexpr uint32_t philox_word(PhiloxKey key, uint64_t k) {
  return philox_block(key, k / 4)[k % 4];
}

}  // namespace qkernel::simd

#endif  // QKERNEL_SIMD_PHILOX_H_
