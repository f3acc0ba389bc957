// include/btforge/metric.h

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

#ifndef BTFORGE_METRIC_H_
#define BTFORGE_METRIC_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "btforge/types.h"

namespace btforge {

// A corpus-level score on the 0..100 scale plus the named intermediate
// quantities it was assembled from.  The value is never rounded here;
// rendering decides display precision.
struct MetricScore {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> components;
};

// Every metric reduces a hyp/ref line pair to a fixed-width row of
// integer sufficient statistics; corpus scores and bootstrap resamples
// are both computed from sums of those rows, which keeps the two paths
// consistent by construction.
class MetricEvaluator {
 public:
  virtual ~MetricEvaluator() = default;
  virtual const char *Name() const = 0;
  virtual size_t StatsWidth() const = 0;
  virtual void LineStats(const Sentence &hyp, const Sentence &ref,
                         int64_t *out) const = 0;
  virtual MetricScore ScoreFromStats(const int64_t *stats) const = 0;
};

// Row-major n x StatsWidth matrix of per-line statistics.  Throws
// DataError with a 1-based line number if a line pair is invalid.
std::vector<int64_t> ComputeLineStats(const MetricEvaluator &metric,
                                      const Corpus &hyps, const Corpus &refs,
                                      int threads = 1);

MetricScore EvaluateCorpus(const MetricEvaluator &metric, const Corpus &hyps,
                           const Corpus &refs, int threads = 1);

// bleu, ter, chrf or meteor.
std::unique_ptr<MetricEvaluator> MakeEvaluator(const std::string &name);

}  // namespace btforge

#endif  // BTFORGE_METRIC_H_
