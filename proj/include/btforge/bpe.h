// include/btforge/bpe.h

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

#ifndef BTFORGE_BPE_H_
#define BTFORGE_BPE_H_

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "btforge/types.h"

namespace btforge {

// Byte-pair segmentation model: an ordered list of symbol merges learned
// by greedy most-frequent-pair selection.  Words are decomposed into
// code-point symbols with an end-of-word sentinel attached to the final
// one; ties on pair frequency prefer the lexicographically smallest
// (left, right) pair, which makes learning fully deterministic.
struct BpeModel {
  static constexpr const char *kEow = "</w>";

  std::vector<std::pair<std::string, std::string>> merges;
  std::string continuation = "@@";

  // Header line "#btforge-bpe v1", then one merge per line as
  // "left<SPACE>right".  Symbols never contain whitespace.
  std::string Serialize() const;
  static BpeModel Parse(const std::string &content);
  void Save(const std::string &path) const;
  static BpeModel Load(const std::string &path);
};

// Learns num_merges merges over the joint vocabulary of both corpora.
// Stops early once no pair occurs at least twice.  Because selection is
// greedy, a model learned with a smaller budget is always a prefix of
// one learned with a larger budget on the same data.
BpeModel LearnBpe(const Corpus &corpus_a, const Corpus &corpus_b,
                  size_t num_merges);

// Applies merges to one token and emits pieces, all but the last
// carrying the continuation marker.  Caches segmentations per surface
// form, so reuse one encoder per corpus pass.
class BpeEncoder {
 public:
  explicit BpeEncoder(const BpeModel &model);

  std::vector<Token> EncodeToken(const Token &token);
  Sentence EncodeSentence(const Sentence &tokens);

 private:
  std::vector<std::string> Segment(const Token &token) const;

  const BpeModel &model_;
  std::unordered_map<std::string, size_t> ranks_;
  std::unordered_map<std::string, std::vector<Token>> cache_;
};

Sentence ApplyBpe(const BpeModel &model, const Sentence &tokens);

// Rejoins continuation pieces.  A trailing piece that still carries the
// marker is malformed input.
Sentence UndoBpe(const Sentence &pieces, const std::string &continuation = "@@");

}  // namespace btforge

#endif  // BTFORGE_BPE_H_
