// src/kernels/kernels_avx2.cc

// Copyright 2024  The btforge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "btforge/kernels.h"

#ifdef BTFORGE_X86

#include <immintrin.h>

#include <algorithm>
#include <vector>

namespace btforge {
namespace kernels {

// Anti-diagonal formulation: cells on diagonal d = i + j depend only on
// diagonals d-1 and d-2, so a whole diagonal is computed with 8-lane
// epi32 min/add.  b is stored reversed so that both operand loads walk
// forward in memory as the lane index i increases.
uint32_t EditDistanceAvx2(const uint32_t *a, size_t alen,
                          const uint32_t *b, size_t blen) {
  const size_t m = alen, n = blen;
  if (m == 0) return static_cast<uint32_t>(n);
  if (n == 0) return static_cast<uint32_t>(m);
  std::vector<uint32_t> brev(n);
  for (size_t x = 0; x < n; ++x) brev[x] = b[n - 1 - x];
  std::vector<uint32_t> buf0(m + 1), buf1(m + 1), buf2(m + 1);
  uint32_t *prev2 = buf0.data();  // diagonal d-2
  uint32_t *prev = buf1.data();   // diagonal d-1
  uint32_t *cur = buf2.data();
  prev2[0] = 0;
  prev[0] = 1;
  if (m >= 1) prev[1] = 1;
  const __m256i one = _mm256_set1_epi32(1);
  for (size_t d = 2; d <= m + n; ++d) {
    size_t lo = d > n ? d - n : 0;
    size_t hi = std::min(m, d);
    if (lo == 0) cur[0] = static_cast<uint32_t>(d);
    if (hi == d) cur[d] = static_cast<uint32_t>(d);
    size_t vlo = std::max<size_t>(lo, 1);
    size_t vhi = std::min(hi, d - 1);
    size_t i = vlo;
    for (; i + 7 <= vhi; i += 8) {
      __m256i up = _mm256_loadu_si256(
          reinterpret_cast<const __m256i *>(prev + i));
      __m256i left = _mm256_loadu_si256(
          reinterpret_cast<const __m256i *>(prev + i - 1));
      __m256i diag = _mm256_loadu_si256(
          reinterpret_cast<const __m256i *>(prev2 + i - 1));
      __m256i av = _mm256_loadu_si256(
          reinterpret_cast<const __m256i *>(a + i - 1));
      __m256i bv = _mm256_loadu_si256(
          reinterpret_cast<const __m256i *>(brev.data() + (n - d + i)));
      // cmpeq yields -1 on equal lanes, cancelling the +1 cost.
      __m256i eq = _mm256_cmpeq_epi32(av, bv);
      __m256i sub = _mm256_add_epi32(_mm256_add_epi32(diag, one), eq);
      __m256i ins = _mm256_add_epi32(_mm256_min_epu32(up, left), one);
      _mm256_storeu_si256(reinterpret_cast<__m256i *>(cur + i),
                          _mm256_min_epu32(sub, ins));
    }
    for (; i <= vhi; ++i) {
      uint32_t cost = (a[i - 1] == brev[n - d + i]) ? 0 : 1;
      cur[i] = std::min(std::min(prev[i], prev[i - 1]) + 1,
                        prev2[i - 1] + cost);
    }
    uint32_t *t = prev2;
    prev2 = prev;
    prev = cur;
    cur = t;
  }
  return prev[m];
}

void SumRowsAvx2(const int64_t *rows, size_t width, const uint32_t *idx,
                 size_t count, int64_t *out) {
  size_t t = 0;
  for (; t + 4 <= width; t += 4) {
    __m256i acc = _mm256_loadu_si256(
        reinterpret_cast<const __m256i *>(out + t));
    for (size_t j = 0; j < count; ++j) {
      const int64_t *row = rows + static_cast<size_t>(idx[j]) * width;
      acc = _mm256_add_epi64(acc, _mm256_loadu_si256(
          reinterpret_cast<const __m256i *>(row + t)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + t), acc);
  }
  for (; t < width; ++t) {
    int64_t acc = out[t];
    for (size_t j = 0; j < count; ++j)
      acc += rows[static_cast<size_t>(idx[j]) * width + t];
    out[t] = acc;
  }
}

}  // namespace kernels
}  // namespace btforge

#endif  // BTFORGE_X86
