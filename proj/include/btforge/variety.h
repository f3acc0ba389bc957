// include/btforge/variety.h

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

#ifndef BTFORGE_VARIETY_H_
#define BTFORGE_VARIETY_H_

#include <cstdint>
#include <map>
#include <vector>

#include "btforge/pos_tagger.h"
#include "btforge/types.h"

namespace btforge {

// Number of distinct surface forms, case-sensitive.
int64_t VocabSize(const Corpus &corpus);

struct VarietyCounts {
  std::map<int, int64_t> per_n;  // distinct n-grams for n = 1..n_max
  int64_t total = 0;
};

// Distinct tag n-grams per order; n-grams never cross sentences.
VarietyCounts PosNgramVariety(const std::vector<std::vector<PosTag>> &tags,
                              int n_max = 4);

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
};

// Multiset mode pools per-line clipped n-gram matches over the corpus;
// distinct mode intersects corpus-wide n-gram sets.  A side without a
// single n-gram is an error.
PrecisionRecall NgramPrecisionRecall(const Corpus &hyp, const Corpus &ref,
                                     int n = 4, bool distinct = false);

}  // namespace btforge

#endif  // BTFORGE_VARIETY_H_
