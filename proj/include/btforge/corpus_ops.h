// include/btforge/corpus_ops.h

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

#ifndef BTFORGE_CORPUS_OPS_H_
#define BTFORGE_CORPUS_OPS_H_

#include <cstdint>
#include <map>

#include "btforge/corpus.h"

namespace btforge {

// Interleaving plan for two synthetic-source corpora that share one
// target side.
struct MixPlan {
  size_t block_size = 500000;
  bool a_first = true;  // which corpus supplies block 0
};

// Both corpora must be the same length with token-identical targets.
// Line i takes its source and provenance from a when block index
// i / block_size is even (a_first) and from b otherwise; the target
// side is passed through unchanged.
ParallelCorpus MixAlternating(const ParallelCorpus &a, const ParallelCorpus &b,
                              const MixPlan &plan);

// Concatenation a then b under the same preconditions, so every target
// sentence appears exactly twice in the result.
ParallelCorpus MixFull(const ParallelCorpus &a, const ParallelCorpus &b);

struct SampleSplit {
  ParallelCorpus sample;
  ParallelCorpus rest;
};

// Order-preserving split into k uniformly chosen lines and the
// remainder.  Selection uses the fixed generator in rng.h, so a seed
// pins the exact line set on every platform.
SampleSplit SampleLines(const ParallelCorpus &c, size_t k, uint64_t seed);

struct LengthStats {
  size_t sentences = 0;
  size_t tokens = 0;
  double mean = 0.0;
  std::map<size_t, size_t> histogram;  // token count -> sentences
};

LengthStats ComputeLengthStats(const std::vector<std::string> &lines);

}  // namespace btforge

#endif  // BTFORGE_CORPUS_OPS_H_
