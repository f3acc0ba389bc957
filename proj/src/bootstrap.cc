// src/bootstrap.cc

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

#include "btforge/bootstrap.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "btforge/kernels.h"
#include "btforge/line_io.h"
#include "btforge/parallel.h"
#include "btforge/rng.h"

namespace btforge {

BootstrapResult PairedBootstrap(const MetricEvaluator &metric,
                                const Corpus &hyp_a, const Corpus &hyp_b,
                                const Corpus &refs, int resamples,
                                uint64_t seed, int threads) {
  if (hyp_a.size() != refs.size() || hyp_b.size() != refs.size())
    throw DataError("system and reference corpora differ in size");
  if (refs.size() < 2) throw DataError("need at least 2 lines");
  if (resamples < 1) throw DataError("need at least 1 resample");

  const size_t n = refs.size();
  const size_t width = metric.StatsWidth();
  const std::vector<int64_t> rows_a =
      ComputeLineStats(metric, hyp_a, refs, threads);
  const std::vector<int64_t> rows_b =
      ComputeLineStats(metric, hyp_b, refs, threads);

  BootstrapResult out;
  out.resamples = resamples;
  {
    std::vector<uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0u);
    std::vector<int64_t> sum_a(width, 0), sum_b(width, 0);
    kernels::SumRows(rows_a.data(), width, all.data(), n, sum_a.data());
    kernels::SumRows(rows_b.data(), width, all.data(), n, sum_b.data());
    out.score_a = metric.ScoreFromStats(sum_a.data()).value;
    out.score_b = metric.ScoreFromStats(sum_b.data()).value;
  }
  out.delta = out.score_a - out.score_b;
  if (out.delta == 0.0) {
    out.no_difference = true;
    out.p_value = 1.0;
    return out;
  }

  // The whole index stream comes out of one generator before any
  // recomputation starts; resample b always sees the same indices no
  // matter how the work is split afterwards.
  std::vector<uint32_t> indices(static_cast<size_t>(resamples) * n);
  Rng rng(seed);
  for (uint32_t &v : indices) v = static_cast<uint32_t>(rng.Bounded(n));

  std::vector<double> deltas(resamples);
  ParallelFor(static_cast<size_t>(resamples), threads,
              [&](size_t begin, size_t end) {
                std::vector<int64_t> sum_a(width), sum_b(width);
                for (size_t b = begin; b < end; ++b) {
                  std::fill(sum_a.begin(), sum_a.end(), 0);
                  std::fill(sum_b.begin(), sum_b.end(), 0);
                  const uint32_t *idx = indices.data() + b * n;
                  kernels::SumRows(rows_a.data(), width, idx, n, sum_a.data());
                  kernels::SumRows(rows_b.data(), width, idx, n, sum_b.data());
                  deltas[b] = metric.ScoreFromStats(sum_a.data()).value -
                              metric.ScoreFromStats(sum_b.data()).value;
                }
              });

  int64_t opposite = 0;
  for (double d : deltas) {
    if (out.delta > 0.0 ? d <= 0.0 : d >= 0.0) ++opposite;
  }
  out.p_value = static_cast<double>(opposite) / resamples;
  return out;
}

}  // namespace btforge
