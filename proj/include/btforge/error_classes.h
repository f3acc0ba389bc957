// include/btforge/error_classes.h

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

#ifndef BTFORGE_ERROR_CLASSES_H_
#define BTFORGE_ERROR_CLASSES_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "btforge/types.h"

namespace btforge {

// Word-level translation error taxonomy.  Every non-matched token ends
// up in exactly one class, assigned by combining the positional WER
// alignment with positionless bag-of-word residues on each side:
//
//   morph           wrong inflection of the right base form
//   order           right word, wrong position
//   omission        reference word with no trace in the hypothesis
//   addition        hypothesis word with no trace in the reference
//   mistranslation  everything else the WER alignment substitutes
enum ErrorClassId {
  kMorphError = 0,
  kOrderError = 1,
  kOmissionError = 2,
  kAdditionError = 3,
  kMistranslationError = 4,
  kNumErrorClasses = 5,
};

constexpr uint8_t kNoError = 255;

const char *ErrorClassName(int id);

struct ErrorCounts {
  std::array<int64_t, kNumErrorClasses> ref{};
  std::array<int64_t, kNumErrorClasses> hyp{};
  int64_t ref_tokens = 0;
  int64_t hyp_tokens = 0;

  ErrorCounts &operator+=(const ErrorCounts &o);
};

struct SentenceErrors {
  ErrorCounts counts;
  std::vector<uint8_t> ref_label;  // kNoError for correct tokens
  std::vector<uint8_t> hyp_label;
};

SentenceErrors ClassifyErrors(const Sentence &ref, const Sentence &hyp);

ErrorCounts CountCorpusErrors(const Corpus &refs, const Corpus &hyps,
                              int threads = 1);

// Percent rates: morph, order and mistranslation average the two sides,
// omission is relative to reference tokens, addition to hypothesis
// tokens.  Zero tokens on a needed side is an error.
std::map<std::string, double> ErrorRates(const ErrorCounts &counts);

}  // namespace btforge

#endif  // BTFORGE_ERROR_CLASSES_H_
