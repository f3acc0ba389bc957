// include/btforge/meteor.h

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

#ifndef BTFORGE_METEOR_H_
#define BTFORGE_METEOR_H_

#include "btforge/metric.h"

namespace btforge {

// Unigram F-measure with a fragmentation penalty and no external
// resources.  Alignment runs in two stages, exact surface match first
// and then stem match over what remains; the match count is the exact
// two-stage maximum and the chunk count is minimized over occurrence
// assignments by bounded search (falling back to a deterministic greedy
// assignment on pathological sentences).  Parameters alpha = 0.9,
// penalty exponent 3 and penalty weight 0.5; matches, chunk counts and
// lengths pool over the corpus before the formula applies.
class MeteorEvaluator : public MetricEvaluator {
 public:
  const char *Name() const override { return "METEOR"; }
  size_t StatsWidth() const override { return 4; }
  void LineStats(const Sentence &hyp, const Sentence &ref,
                 int64_t *out) const override;
  MetricScore ScoreFromStats(const int64_t *stats) const override;

  static constexpr double kAlpha = 0.9;
  static constexpr double kBetaExp = 3.0;
  static constexpr double kGamma = 0.5;
};

struct MeteorLineAlignment {
  int64_t matches = 0;
  int64_t chunks = 0;
};

MeteorLineAlignment MeteorAlign(const Sentence &hyp, const Sentence &ref);

MetricScore CorpusMeteor(const Corpus &hyps, const Corpus &refs,
                         int threads = 1);

}  // namespace btforge

#endif  // BTFORGE_METEOR_H_
