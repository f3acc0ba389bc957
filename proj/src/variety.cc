// src/variety.cc

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

#include "btforge/variety.h"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "btforge/line_io.h"

namespace btforge {

namespace {

// 0x1f never occurs inside a whitespace-split token, so joining with it
// gives an injective n-gram key.
std::string NgramKey(const Sentence &s, size_t start, int n) {
  std::string key;
  for (int k = 0; k < n; ++k) {
    if (k > 0) key.push_back('\x1f');
    key += s[start + k];
  }
  return key;
}

}  // namespace

int64_t VocabSize(const Corpus &corpus) {
  std::unordered_set<std::string> vocab;
  for (const Sentence &s : corpus)
    for (const Token &t : s) vocab.insert(t);
  return static_cast<int64_t>(vocab.size());
}

VarietyCounts PosNgramVariety(const std::vector<std::vector<PosTag>> &tags,
                              int n_max) {
  VarietyCounts out;
  for (int n = 1; n <= n_max; ++n) {
    std::unordered_set<std::string> grams;
    for (const std::vector<PosTag> &sent : tags) {
      if (sent.size() < static_cast<size_t>(n)) continue;
      std::string key(static_cast<size_t>(n), '\0');
      for (size_t i = 0; i + n <= sent.size(); ++i) {
        for (int k = 0; k < n; ++k)
          key[k] = static_cast<char>(sent[i + k]);
        grams.insert(key);
      }
    }
    out.per_n[n] = static_cast<int64_t>(grams.size());
    out.total += static_cast<int64_t>(grams.size());
  }
  return out;
}

PrecisionRecall NgramPrecisionRecall(const Corpus &hyp, const Corpus &ref,
                                     int n, bool distinct) {
  if (hyp.size() != ref.size())
    throw DataError("corpus sizes differ: " + std::to_string(hyp.size()) +
                    " vs " + std::to_string(ref.size()));
  PrecisionRecall out;
  if (distinct) {
    std::unordered_set<std::string> h, r;
    for (const Sentence &s : hyp)
      for (size_t i = 0; i + n <= s.size(); ++i) h.insert(NgramKey(s, i, n));
    for (const Sentence &s : ref)
      for (size_t i = 0; i + n <= s.size(); ++i) r.insert(NgramKey(s, i, n));
    if (h.empty() || r.empty()) throw DataError("no n-grams");
    int64_t common = 0;
    for (const std::string &g : h) common += r.count(g);
    out.precision = static_cast<double>(common) / static_cast<double>(h.size());
    out.recall = static_cast<double>(common) / static_cast<double>(r.size());
    return out;
  }
  int64_t matches = 0, hyp_total = 0, ref_total = 0;
  for (size_t line = 0; line < hyp.size(); ++line) {
    std::unordered_map<std::string, int64_t> ref_counts;
    const Sentence &r = ref[line];
    const Sentence &h = hyp[line];
    for (size_t i = 0; i + n <= r.size(); ++i) ++ref_counts[NgramKey(r, i, n)];
    std::unordered_map<std::string, int64_t> hyp_counts;
    for (size_t i = 0; i + n <= h.size(); ++i) ++hyp_counts[NgramKey(h, i, n)];
    for (const auto &[gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matches += std::min(count, it->second);
      hyp_total += count;
    }
    for (const auto &[gram, count] : ref_counts) ref_total += count;
  }
  if (hyp_total == 0 || ref_total == 0) throw DataError("no n-grams");
  out.precision = static_cast<double>(matches) / static_cast<double>(hyp_total);
  out.recall = static_cast<double>(matches) / static_cast<double>(ref_total);
  return out;
}

}  // namespace btforge
