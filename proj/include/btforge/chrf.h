// include/btforge/chrf.h

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

#ifndef BTFORGE_CHRF_H_
#define BTFORGE_CHRF_H_

#include "btforge/metric.h"

namespace btforge {

// Character n-gram F-score.  Tokens are concatenated without
// whitespace; clipped matches, hypothesis totals and reference totals
// are pooled per order over the corpus, precision and recall are
// arithmetic means over orders 1..max_n, and orders with no n-grams
// contribute zero.  beta weights recall (beta = 1 is chrF1).
class ChrfEvaluator : public MetricEvaluator {
 public:
  explicit ChrfEvaluator(int max_n = 6, double beta = 1.0)
      : max_n_(max_n), beta_(beta) {}

  const char *Name() const override { return "CHRF1"; }
  size_t StatsWidth() const override { return 3 * max_n_; }
  void LineStats(const Sentence &hyp, const Sentence &ref,
                 int64_t *out) const override;
  MetricScore ScoreFromStats(const int64_t *stats) const override;

 private:
  int max_n_;
  double beta_;
};

MetricScore CorpusChrf(const Corpus &hyps, const Corpus &refs,
                       int threads = 1);

}  // namespace btforge

#endif  // BTFORGE_CHRF_H_
