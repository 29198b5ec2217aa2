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

// Compiled with -mavx2 -mfma. Only reached through the dispatcher after a
// CPUID check, so nothing here may run at static-initialization time.

#include <immintrin.h>

#include <algorithm>

#include "qkernel/simd/kernels.h"

namespace qkernel::simd::avx2 {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline uint64_t hsum_u32(__m256i v) {
  alignas(32) uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  uint64_t s = 0;
  for (uint32_t x : lanes) s += x;
  return s;
}

// 32x32 -> 64 multiply of every 32-bit lane of `a` by the constant in `m`.
inline void mulhilo(__m256i a, __m256i m, __m256i& hi, __m256i& lo) {
  const __m256i even = _mm256_mul_epu32(a, m);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), m);
  lo = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0b10101010);
  hi = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0b10101010);
}

// Philox4x32-10 on eight counters at once, structure-of-arrays.
inline void philox_rounds(__m256i& c0, __m256i& c1, __m256i& c2, __m256i& c3, PhiloxKey key) {
  const __m256i m0 = _mm256_set1_epi32(static_cast<int>(kPhiloxM0));
  const __m256i m1 = _mm256_set1_epi32(static_cast<int>(kPhiloxM1));
  __m256i k0 = _mm256_set1_epi32(static_cast<int>(key.k0));
  __m256i k1 = _mm256_set1_epi32(static_cast<int>(key.k1));
  const __m256i w0 = _mm256_set1_epi32(static_cast<int>(kPhiloxW0));
  const __m256i w1 = _mm256_set1_epi32(static_cast<int>(kPhiloxW1));
  for (int r = 0; r < kPhiloxRounds; ++r) {
    if (r > 0) {
      k0 = _mm256_add_epi32(k0, w0);
      k1 = _mm256_add_epi32(k1, w1);
    }
    __m256i hi0, lo0, hi1, lo1;
    mulhilo(c0, m0, hi0, lo0);
    mulhilo(c2, m1, hi1, lo1);
    c0 = _mm256_xor_si256(_mm256_xor_si256(hi1, c1), k0);
    c1 = lo1;
    c2 = _mm256_xor_si256(_mm256_xor_si256(hi0, c3), k1);
    c3 = lo0;
  }
}

// Counters for blocks [block, block + 8); caller guarantees lo32 does not wrap.
inline void load_counters(uint64_t block, __m256i& c0, __m256i& c1, __m256i& c2, __m256i& c3) {
  const auto lo = static_cast<int>(static_cast<uint32_t>(block));
  const auto hi = static_cast<int>(static_cast<uint32_t>(block >> 32));
  c0 = _mm256_add_epi32(_mm256_set1_epi32(lo), _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
  c1 = _mm256_set1_epi32(hi);
  c2 = _mm256_setzero_si256();
  c3 = _mm256_setzero_si256();
}

constexpr uint64_t kLanes = 8;
constexpr uint64_t kWordsPerChunk = 4 * kLanes;

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void philox_x8(PhiloxKey key, uint64_t block, uint32_t out[32]) {
  __m256i c0, c1, c2, c3;
  load_counters(block, c0, c1, c2, c3);
  philox_rounds(c0, c1, c2, c3, key);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 0), c0);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 8), c1);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 16), c2);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 24), c3);
}

uint64_t count_below(PhiloxKey key, uint64_t first, uint64_t count, uint64_t threshold) {
  if (threshold == 0 || count == 0) return 0;
  if (threshold >= kAlwaysBelow) return count;

  uint64_t k = first;
  const uint64_t last = first + count;
  uint64_t hits = 0;

  // Head: up to the next block boundary.
  const uint64_t head_end = std::min(last, (k + 3) / 4 * 4);
  if (k < head_end) {
    hits += scalar::count_below(key, k, head_end - k, threshold);
    k = head_end;
  }

  // Unsigned compare via sign flip: w < t  <=>  (w ^ 2^31) < (t ^ 2^31) as signed.
  const __m256i flip = _mm256_set1_epi32(static_cast<int>(0x80000000u));
  const __m256i thr = _mm256_set1_epi32(static_cast<int>(static_cast<uint32_t>(threshold) ^ 0x80000000u));
  __m256i acc = _mm256_setzero_si256();
  uint64_t pending = 0;

  while (last - k >= kWordsPerChunk) {
    const uint64_t block = k / 4;
    if (static_cast<uint32_t>(block) > 0xFFFFFFFFu - (kLanes - 1)) break;
    __m256i c0, c1, c2, c3;
    load_counters(block, c0, c1, c2, c3);
    philox_rounds(c0, c1, c2, c3, key);
    // cmpgt yields -1 per hit; subtracting accumulates +1.
    acc = _mm256_sub_epi32(acc, _mm256_cmpgt_epi32(thr, _mm256_xor_si256(c0, flip)));
    acc = _mm256_sub_epi32(acc, _mm256_cmpgt_epi32(thr, _mm256_xor_si256(c1, flip)));
    acc = _mm256_sub_epi32(acc, _mm256_cmpgt_epi32(thr, _mm256_xor_si256(c2, flip)));
    acc = _mm256_sub_epi32(acc, _mm256_cmpgt_epi32(thr, _mm256_xor_si256(c3, flip)));
    k += kWordsPerChunk;
    // Each lane gains at most 4 per chunk; flush well before 32-bit overflow.
    if (++pending == (uint64_t{1} << 28)) {
      hits += hsum_u32(acc);
      acc = _mm256_setzero_si256();
      pending = 0;
    }
  }
  hits += hsum_u32(acc);

  if (k < last) hits += scalar::count_below(key, k, last - k, threshold);
  return hits;
}

}  // namespace qkernel::simd::avx2
