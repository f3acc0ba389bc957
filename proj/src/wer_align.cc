// src/wer_align.cc

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

#include "btforge/wer_align.h"

#include <algorithm>
#include <unordered_map>

namespace btforge {

WerAlignment WerAlignIds(const std::vector<uint32_t> &ref,
                         const std::vector<uint32_t> &hyp) {
  const size_t m = ref.size(), n = hyp.size();
  // Full matrix; the deterministic backtrace needs every cell.
  std::vector<uint32_t> d((m + 1) * (n + 1));
  auto at = [&](size_t i, size_t j) -> uint32_t & { return d[i * (n + 1) + j]; };
  for (size_t i = 0; i <= m; ++i) at(i, 0) = static_cast<uint32_t>(i);
  for (size_t j = 0; j <= n; ++j) at(0, j) = static_cast<uint32_t>(j);
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      uint32_t cost = (ref[i - 1] == hyp[j - 1]) ? 0 : 1;
      at(i, j) = std::min(std::min(at(i - 1, j), at(i, j - 1)) + 1,
                          at(i - 1, j - 1) + cost);
    }
  }

  WerAlignment result;
  result.distance = at(m, n);
  // Backtrace from the right; at each cell try match, substitute,
  // delete, insert in that order so the trace is unique.
  size_t i = m, j = n;
  std::vector<AlignStep> rev;
  rev.reserve(m + n);
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        at(i - 1, j - 1) == at(i, j)) {
      rev.push_back({EditOp::kMatch, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && j > 0 && ref[i - 1] != hyp[j - 1] &&
               at(i - 1, j - 1) + 1 == at(i, j)) {
      rev.push_back({EditOp::kSubstitute, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && at(i - 1, j) + 1 == at(i, j)) {
      rev.push_back({EditOp::kDelete, i - 1, AlignStep::npos});
      --i;
    } else {
      rev.push_back({EditOp::kInsert, AlignStep::npos, j - 1});
      --j;
    }
  }
  result.steps.assign(rev.rbegin(), rev.rend());
  for (const AlignStep &s : result.steps) {
    switch (s.op) {
      case EditOp::kMatch: ++result.matches; break;
      case EditOp::kSubstitute: ++result.substitutions; break;
      case EditOp::kDelete: ++result.deletions; break;
      case EditOp::kInsert: ++result.insertions; break;
    }
  }
  return result;
}

WerAlignment WerAlign(const Sentence &ref, const Sentence &hyp) {
  std::unordered_map<std::string, uint32_t> ids;
  auto intern = [&ids](const Sentence &sent) {
    std::vector<uint32_t> out;
    out.reserve(sent.size());
    for (const Token &t : sent) {
      auto [it, unused] = ids.emplace(t, static_cast<uint32_t>(ids.size()));
      out.push_back(it->second);
    }
    return out;
  };
  std::vector<uint32_t> rid = intern(ref);
  std::vector<uint32_t> hid = intern(hyp);
  return WerAlignIds(rid, hid);
}

}  // namespace btforge
