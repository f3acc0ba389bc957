// include/btforge/pos_tagger.h

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

#ifndef BTFORGE_POS_TAGGER_H_
#define BTFORGE_POS_TAGGER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "btforge/types.h"

namespace btforge {

// Coarse 12-tag set.  Small on purpose: variety measurements only need
// a consistent tagging function, not linguistic fidelity.
enum class PosTag : uint8_t {
  kNoun,
  kVerb,
  kAdj,
  kAdv,
  kPron,
  kDet,
  kAdp,
  kNum,
  kConj,
  kPrt,
  kPunct,
  kX,
};

const char *PosTagName(PosTag tag);
bool ParsePosTag(const std::string &name, PosTag *tag);

struct TaggedSentence {
  Sentence tokens;
  std::vector<PosTag> tags;  // always same length as tokens
};

// Rule tagger.  Order of application per token: closed-class lexicon
// (lowercased lookup), all-punctuation, numeral, suffix rules, NOUN.
// Only an empty token falls through to X.
std::vector<PosTag> CoarseTag(const Sentence &tokens);

// Parses pre-tagged input, tokens as "word_TAG" separated by spaces.
// The split is on the last underscore, so words may contain their own.
TaggedSentence ParseTaggedLine(const std::string &line);

}  // namespace btforge

#endif  // BTFORGE_POS_TAGGER_H_
