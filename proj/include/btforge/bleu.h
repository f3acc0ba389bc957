// include/btforge/bleu.h

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

#ifndef BTFORGE_BLEU_H_
#define BTFORGE_BLEU_H_

#include "btforge/metric.h"

namespace btforge {

// Corpus BLEU: clipped modified precisions for orders 1..4 pooled over
// all lines, geometric mean, multiplied by the brevity penalty
// exp(1 - ref_len / hyp_len) when the hypothesis is shorter.  No
// smoothing: a zero precision at any order zeroes the score.
class BleuEvaluator : public MetricEvaluator {
 public:
  const char *Name() const override { return "BLEU"; }
  size_t StatsWidth() const override { return 10; }
  void LineStats(const Sentence &hyp, const Sentence &ref,
                 int64_t *out) const override;
  MetricScore ScoreFromStats(const int64_t *stats) const override;
};

MetricScore CorpusBleu(const Corpus &hyps, const Corpus &refs,
                       int threads = 1);

}  // namespace btforge

#endif  // BTFORGE_BLEU_H_
