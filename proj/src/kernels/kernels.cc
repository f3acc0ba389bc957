// src/kernels/kernels.cc

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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace btforge {
namespace kernels {

namespace {

std::atomic<Impl> g_forced{Impl::kAuto};

bool CpuHasAvx2() {
#ifdef BTFORGE_X86
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool UseAvx2() {
  Impl forced = g_forced.load(std::memory_order_relaxed);
  if (forced == Impl::kScalar) return false;
  if (!CpuHasAvx2()) return false;
  if (forced == Impl::kAvx2) return true;
  // kAuto also honors an environment override for field debugging.
  static const int env_scalar = []() {
    const char *v = std::getenv("BTFORGE_KERNEL");
    return (v != nullptr && std::strcmp(v, "scalar") == 0) ? 1 : 0;
  }();
  return env_scalar == 0;
}

}  // namespace

void ForceImpl(Impl impl) { g_forced.store(impl, std::memory_order_relaxed); }

const char *ActiveImplName() { return UseAvx2() ? "avx2" : "scalar"; }

uint32_t EditDistanceScalar(const uint32_t *a, size_t alen,
                            const uint32_t *b, size_t blen) {
  if (alen == 0) return static_cast<uint32_t>(blen);
  if (blen == 0) return static_cast<uint32_t>(alen);
  std::vector<uint32_t> row(blen + 1);
  for (size_t j = 0; j <= blen; ++j) row[j] = static_cast<uint32_t>(j);
  for (size_t i = 1; i <= alen; ++i) {
    uint32_t diag = row[0];
    row[0] = static_cast<uint32_t>(i);
    for (size_t j = 1; j <= blen; ++j) {
      uint32_t up = row[j];
      uint32_t cost = (a[i - 1] == b[j - 1]) ? 0 : 1;
      uint32_t best = std::min(std::min(up + 1, row[j - 1] + 1), diag + cost);
      diag = up;
      row[j] = best;
    }
  }
  return row[blen];
}

void SumRowsScalar(const int64_t *rows, size_t width, const uint32_t *idx,
                   size_t count, int64_t *out) {
  for (size_t j = 0; j < count; ++j) {
    const int64_t *row = rows + static_cast<size_t>(idx[j]) * width;
    for (size_t t = 0; t < width; ++t) out[t] += row[t];
  }
}

uint32_t EditDistance(const uint32_t *a, size_t alen,
                      const uint32_t *b, size_t blen) {
#ifdef BTFORGE_X86
  if (UseAvx2()) return EditDistanceAvx2(a, alen, b, blen);
#endif
  return EditDistanceScalar(a, alen, b, blen);
}

void SumRows(const int64_t *rows, size_t width, const uint32_t *idx,
             size_t count, int64_t *out) {
#ifdef BTFORGE_X86
  if (UseAvx2()) {
    SumRowsAvx2(rows, width, idx, count, out);
    return;
  }
#endif
  SumRowsScalar(rows, width, idx, count, out);
}

}  // namespace kernels
}  // namespace btforge
