// Copyright 2026 The cyclolat Authors
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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "cyclolat/simd/kernels.hpp"

namespace cyclolat::simd {
namespace {

inline __m256i dot_block(const LinearForms& f, const std::int32_t* x, std::size_t r0) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t j = 0; j < f.dim(); ++j) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f.coord(j) + r0));
    acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(a, _mm256_set1_epi32(x[j])));
  }
  return acc;
}

inline __m256i limit_block(const LinearForms& f, std::int32_t scale, std::size_t r0) {
  const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f.bounds() + r0));
  return _mm256_mullo_epi32(b, _mm256_set1_epi32(scale));
}

void evaluate_avx2(const LinearForms& f, const std::int32_t* x, std::int32_t* out) {
  alignas(32) std::int32_t tmp[kLanes];
  for (std::size_t r0 = 0; r0 < f.rows(); r0 += kLanes) {
    const __m256i v = dot_block(f, x, r0);
    if (r0 + kLanes <= f.rows()) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + r0), v);
    } else {
      _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), v);
      for (std::size_t i = 0; r0 + i < f.rows(); ++i) out[r0 + i] = tmp[i];
    }
  }
}

// Padding rows carry bound INT32_MAX; scale * INT32_MAX wraps in mullo, so
// padding lanes are masked out explicitly.
inline int valid_lanes(const LinearForms& f, std::size_t r0) {
  const std::size_t n = f.rows() - r0;
  return n >= kLanes ? 0xFF : (1 << n) - 1;
}

bool all_within_avx2(const LinearForms& f, const std::int32_t* x, std::int32_t scale) {
  for (std::size_t r0 = 0; r0 < f.rows(); r0 += kLanes) {
    const __m256i gt = _mm256_cmpgt_epi32(dot_block(f, x, r0), limit_block(f, scale, r0));
    if (_mm256_movemask_ps(_mm256_castsi256_ps(gt)) & valid_lanes(f, r0)) return false;
  }
  return true;
}

Classification classify_avx2(const LinearForms& f, const std::int32_t* x, std::int32_t scale) {
  Classification c;
  for (std::size_t r0 = 0; r0 < f.rows(); r0 += kLanes) {
    const __m256i v = dot_block(f, x, r0);
    const __m256i lim = limit_block(f, scale, r0);
    const int lanes = valid_lanes(f, r0);
    if (_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(v, lim))) & lanes) return {};
    const auto eq = static_cast<std::uint64_t>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, lim))) & lanes);
    c.equal_mask |= eq << r0;
  }
  c.within = true;
  return c;
}

}  // namespace

const Kernels& avx2_kernels_impl() {
  static const Kernels k{"avx2", &evaluate_avx2, &all_within_avx2, &classify_avx2};
  return k;
}

}  // namespace cyclolat::simd
