// include/btforge/ter.h

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

#ifndef BTFORGE_TER_H_
#define BTFORGE_TER_H_

#include "btforge/metric.h"

namespace btforge {

// Translation edit rate: edits / reference length, where block shifts
// count as single edits.  The shift search is greedy: each round it
// applies the candidate shift that most reduces the plain edit
// distance, and stops when no candidate reduces it.  A candidate block
// must appear verbatim somewhere in the reference, contain at least one
// token the current alignment marks as wrong, be at most
// kMaxBlockLength tokens long and move at most kMaxShiftDistance
// positions.
class TerEvaluator : public MetricEvaluator {
 public:
  static constexpr size_t kMaxBlockLength = 10;
  static constexpr size_t kMaxShiftDistance = 50;

  const char *Name() const override { return "TER"; }
  size_t StatsWidth() const override { return 5; }
  void LineStats(const Sentence &hyp, const Sentence &ref,
                 int64_t *out) const override;
  MetricScore ScoreFromStats(const int64_t *stats) const override;
};

// Per-sentence edit breakdown, exposed for tests and error inspection.
struct TerSentenceResult {
  uint32_t insertions = 0, deletions = 0, substitutions = 0, shifts = 0;
  uint32_t TotalEdits() const {
    return insertions + deletions + substitutions + shifts;
  }
};

TerSentenceResult TerSentence(const Sentence &hyp, const Sentence &ref);

MetricScore CorpusTer(const Corpus &hyps, const Corpus &refs,
                      int threads = 1);

}  // namespace btforge

#endif  // BTFORGE_TER_H_
