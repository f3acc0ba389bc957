// include/btforge/wer_align.h

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

#ifndef BTFORGE_WER_ALIGN_H_
#define BTFORGE_WER_ALIGN_H_

#include <cstdint>
#include <vector>

#include "btforge/types.h"

namespace btforge {

enum class EditOp : uint8_t { kMatch, kSubstitute, kDelete, kInsert };

// One step of an alignment between a reference and a hypothesis.
// ref_index / hyp_index are npos for the side an operation does not
// consume (insert has no ref token, delete has no hyp token).
struct AlignStep {
  static constexpr size_t npos = static_cast<size_t>(-1);
  EditOp op;
  size_t ref_index;
  size_t hyp_index;
};

struct WerAlignment {
  std::vector<AlignStep> steps;  // left-to-right over both sentences
  uint32_t distance = 0;
  uint32_t matches = 0, substitutions = 0, deletions = 0, insertions = 0;
};

// Unit-cost Levenshtein alignment.  Among cost-ties the backtrace
// prefers match, then substitute, then delete, then insert, applied
// from the right end of the sentences, which makes the returned trace
// unique for any input pair.
WerAlignment WerAlign(const Sentence &ref, const Sentence &hyp);

// Same trace over interned token ids; the id overload is the one the
// shift search drives in a loop.
WerAlignment WerAlignIds(const std::vector<uint32_t> &ref,
                         const std::vector<uint32_t> &hyp);

}  // namespace btforge

#endif  // BTFORGE_WER_ALIGN_H_
