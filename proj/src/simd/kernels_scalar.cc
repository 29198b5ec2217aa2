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

#include "qkernel/simd/kernels.h"

#include <algorithm>

namespace qkernel::simd::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

uint64_t count_below(PhiloxKey key, uint64_t first, uint64_t count, uint64_t threshold) {
  if (threshold == 0 || count == 0) return 0;
  if (threshold >= kAlwaysBelow) return count;
  const uint64_t last = first + count;
  uint64_t hits = 0;
  uint64_t k = first;
  while (k < last) {
    const uint64_t block = k / 4;
    const PhiloxCounter words = philox_block(key, block);
    const uint64_t stop = std::min(last, (block + 1) * 4);
    for (; k < stop; ++k) hits += words[k % 4] < threshold;
  }
  return hits;
}

}  // namespace qkernel::simd::scalar
