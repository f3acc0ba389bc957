// src/metric.cc

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

#include "btforge/metric.h"

#include "btforge/bleu.h"
#include "btforge/chrf.h"
#include "btforge/line_io.h"
#include "btforge/meteor.h"
#include "btforge/parallel.h"
#include "btforge/ter.h"

namespace btforge {

std::vector<int64_t> ComputeLineStats(const MetricEvaluator &metric,
                                      const Corpus &hyps, const Corpus &refs,
                                      int threads) {
  if (hyps.size() != refs.size())
    throw DataError("hypothesis/reference line count mismatch: " +
                    std::to_string(hyps.size()) + " vs " +
                    std::to_string(refs.size()));
  size_t width = metric.StatsWidth();
  std::vector<int64_t> stats(hyps.size() * width, 0);
  ParallelFor(hyps.size(), threads, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      try {
        metric.LineStats(hyps[i], refs[i], stats.data() + i * width);
      } catch (const DataError &e) {
        throw DataError("line " + std::to_string(i + 1) + ": " + e.what());
      }
    }
  });
  return stats;
}

MetricScore EvaluateCorpus(const MetricEvaluator &metric, const Corpus &hyps,
                           const Corpus &refs, int threads) {
  size_t width = metric.StatsWidth();
  std::vector<int64_t> stats = ComputeLineStats(metric, hyps, refs, threads);
  std::vector<int64_t> total(width, 0);
  for (size_t i = 0; i < hyps.size(); ++i) {
    const int64_t *row = stats.data() + i * width;
    for (size_t t = 0; t < width; ++t) total[t] += row[t];
  }
  return metric.ScoreFromStats(total.data());
}

std::unique_ptr<MetricEvaluator> MakeEvaluator(const std::string &name) {
  if (name == "bleu") return std::make_unique<BleuEvaluator>();
  if (name == "ter") return std::make_unique<TerEvaluator>();
  if (name == "chrf") return std::make_unique<ChrfEvaluator>();
  if (name == "meteor") return std::make_unique<MeteorEvaluator>();
  throw DataError("unknown metric: " + name);
}

}  // namespace btforge
