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

#ifndef QKERNEL_SIMD_KERNELS_H_
#define QKERNEL_SIMD_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "qkernel/simd/philox.h"

namespace qkernel::simd {

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation; vector variants are selected once at startup from the
// host's CPU features and can be pinned with set_isa() or the QKERNEL_ISA
// environment variable ("scalar", "avx2").

enum class Isa { kScalar, kAvx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();
// Throws std::invalid_argument if the host or build lacks `isa`.
void set_isa(Isa isa);

// Threshold value that makes every 32-bit word count.
inline constexpr uint64_t kAlwaysBelow = uint64_t{1} << 32;

// sum_i a[i] * b[i]. Spans must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

// Number of stream words w_k, k in [first, first + count), with w_k < threshold.
// threshold is in [0, 2^32]; a word is below 2^32 unconditionally.
// The result is bit-identical across ISAs.
uint64_t count_below(PhiloxKey key, uint64_t first, uint64_t count, uint64_t threshold);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
uint64_t count_below(PhiloxKey key, uint64_t first, uint64_t count, uint64_t threshold);
}  // namespace scalar

#if defined(QKERNEL_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
uint64_t count_below(PhiloxKey key, uint64_t first, uint64_t count, uint64_t threshold);
// Eight consecutive blocks starting at `block`, word-major: out[w * 8 + lane].
void philox_x8(PhiloxKey key, uint64_t block, uint32_t out[32]);
}  // namespace avx2
#endif

}  // namespace qkernel::simd

#endif  // QKERNEL_SIMD_KERNELS_H_
