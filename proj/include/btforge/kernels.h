// include/btforge/kernels.h

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

#ifndef BTFORGE_KERNELS_H_
#define BTFORGE_KERNELS_H_

#include <cstddef>
#include <cstdint>

// Hot inner loops of the toolkit: unit-cost edit distance over interned
// token ids (driven very hard by the shift search in the translation
// edit rate metric) and summation of per-line statistic rows (driven by
// bootstrap resampling).  Each kernel has a scalar reference
// implementation and an AVX2 variant selected at runtime; both return
// bit-identical results and the test suite fuzzes them against each
// other.

#if defined(__x86_64__) || defined(_M_X64)
#define BTFORGE_X86 1
#endif

namespace btforge {
namespace kernels {

enum class Impl { kAuto, kScalar, kAvx2 };

// Forces an implementation for testing; kAuto re-enables detection.
// Asking for kAvx2 on a machine without AVX2 falls back to scalar.
void ForceImpl(Impl impl);

// Name of the implementation the dispatcher currently resolves to.
const char *ActiveImplName();

// Unit-cost Levenshtein distance between id sequences a and b.
uint32_t EditDistance(const uint32_t *a, size_t alen,
                      const uint32_t *b, size_t blen);

// out[t] += sum over j of rows[idx[j] * width + t], t in [0, width).
// out must be zeroed by the caller.  Pure integer adds, so the result
// does not depend on summation order.
void SumRows(const int64_t *rows, size_t width, const uint32_t *idx,
             size_t count, int64_t *out);

uint32_t EditDistanceScalar(const uint32_t *a, size_t alen,
                            const uint32_t *b, size_t blen);
void SumRowsScalar(const int64_t *rows, size_t width, const uint32_t *idx,
                   size_t count, int64_t *out);

#ifdef BTFORGE_X86
uint32_t EditDistanceAvx2(const uint32_t *a, size_t alen,
                          const uint32_t *b, size_t blen);
void SumRowsAvx2(const int64_t *rows, size_t width, const uint32_t *idx,
                 size_t count, int64_t *out);
#endif

}  // namespace kernels
}  // namespace btforge

#endif  // BTFORGE_KERNELS_H_
