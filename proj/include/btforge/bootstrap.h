// include/btforge/bootstrap.h

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

#ifndef BTFORGE_BOOTSTRAP_H_
#define BTFORGE_BOOTSTRAP_H_

#include <cstdint>

#include "btforge/metric.h"
#include "btforge/types.h"

namespace btforge {

struct BootstrapResult {
  double score_a = 0.0;  // full-corpus scores
  double score_b = 0.0;
  double delta = 0.0;    // score_a - score_b
  double p_value = 1.0;  // fraction of resamples with opposite-or-zero delta
  bool no_difference = false;
  int resamples = 0;
};

// Paired bootstrap over sentence indices.  Index streams are drawn
// single-threaded from the seed before any recomputation, so the result
// is identical for every thread count and adding resamples extends the
// stream without disturbing earlier draws.  Requires >= 2 lines and
// resamples >= 1.
BootstrapResult PairedBootstrap(const MetricEvaluator &metric,
                                const Corpus &hyp_a, const Corpus &hyp_b,
                                const Corpus &refs, int resamples,
                                uint64_t seed, int threads = 1);

}  // namespace btforge

#endif  // BTFORGE_BOOTSTRAP_H_
