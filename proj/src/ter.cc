// src/ter.cc

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

#include "btforge/ter.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "btforge/kernels.h"
#include "btforge/line_io.h"
#include "btforge/wer_align.h"

namespace btforge {

namespace {

typedef std::vector<uint32_t> IdSeq;

struct SpanHash {
  size_t operator()(const IdSeq &v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Removes hyp[i, i+len) and reinserts it so the block starts at
// position j of the gap-closed sequence.
IdSeq ApplyShift(const IdSeq &hyp, size_t i, size_t len, size_t j) {
  IdSeq rest;
  rest.reserve(hyp.size());
  rest.insert(rest.end(), hyp.begin(), hyp.begin() + i);
  rest.insert(rest.end(), hyp.begin() + i + len, hyp.end());
  IdSeq out;
  out.reserve(hyp.size());
  out.insert(out.end(), rest.begin(), rest.begin() + j);
  out.insert(out.end(), hyp.begin() + i, hyp.begin() + i + len);
  out.insert(out.end(), rest.begin() + j, rest.end());
  return out;
}

struct Shift {
  size_t i, len, j;
  uint32_t new_dist;
};

TerSentenceResult TerIds(const IdSeq &hyp_in, const IdSeq &ref) {
  IdSeq hyp = hyp_in;
  uint32_t dist = kernels::EditDistance(ref.data(), ref.size(), hyp.data(),
                                        hyp.size());
  // Reference spans per length, so candidate blocks can be screened
  // before paying for an edit distance.
  size_t max_len = std::min(TerEvaluator::kMaxBlockLength, ref.size());
  std::vector<std::unordered_set<IdSeq, SpanHash>> ref_spans(max_len + 1);
  for (size_t len = 1; len <= max_len; ++len) {
    for (size_t s = 0; s + len <= ref.size(); ++s)
      ref_spans[len].insert(IdSeq(ref.begin() + s, ref.begin() + s + len));
  }

  uint32_t shifts = 0;
  while (dist > 0 && !hyp.empty()) {
    // Tokens not matched by the current alignment are movable.
    WerAlignment align = WerAlignIds(ref, hyp);
    std::vector<bool> misaligned(hyp.size(), true);
    for (const AlignStep &s : align.steps) {
      if (s.op == EditOp::kMatch) misaligned[s.hyp_index] = false;
    }

    bool have_best = false;
    Shift best{0, 0, 0, 0};
    size_t block_cap = std::min({TerEvaluator::kMaxBlockLength, hyp.size(),
                                 max_len});
    // Longer blocks first; the first candidate wins distance ties.
    for (size_t len = block_cap; len >= 1; --len) {
      for (size_t i = 0; i + len <= hyp.size(); ++i) {
        bool any_wrong = false;
        for (size_t t = i; t < i + len; ++t) {
          if (misaligned[t]) { any_wrong = true; break; }
        }
        if (!any_wrong) continue;
        IdSeq block(hyp.begin() + i, hyp.begin() + i + len);
        if (!ref_spans[len].count(block)) continue;
        for (size_t j = 0; j + len <= hyp.size(); ++j) {
          if (j == i) continue;
          size_t moved = j > i ? j - i : i - j;
          if (moved > TerEvaluator::kMaxShiftDistance) continue;
          IdSeq shifted = ApplyShift(hyp, i, len, j);
          uint32_t nd = kernels::EditDistance(ref.data(), ref.size(),
                                              shifted.data(), shifted.size());
          if (nd < dist && (!have_best || nd < best.new_dist)) {
            best = Shift{i, len, j, nd};
            have_best = true;
          }
        }
      }
      if (len == 1) break;
    }
    if (!have_best) break;
    hyp = ApplyShift(hyp, best.i, best.len, best.j);
    dist = best.new_dist;
    ++shifts;
  }

  WerAlignment final_align = WerAlignIds(ref, hyp);
  TerSentenceResult result;
  result.insertions = final_align.insertions;
  result.deletions = final_align.deletions;
  result.substitutions = final_align.substitutions;
  result.shifts = shifts;
  return result;
}

}  // namespace

TerSentenceResult TerSentence(const Sentence &hyp, const Sentence &ref) {
  std::unordered_map<std::string, uint32_t> ids;
  auto intern = [&ids](const Sentence &sent) {
    IdSeq out;
    out.reserve(sent.size());
    for (const Token &t : sent) {
      auto [it, unused] = ids.emplace(t, static_cast<uint32_t>(ids.size()));
      out.push_back(it->second);
    }
    return out;
  };
  IdSeq hid = intern(hyp);
  IdSeq rid = intern(ref);
  return TerIds(hid, rid);
}

// Stats row: insertions, deletions, substitutions, shifts, ref_len.
void TerEvaluator::LineStats(const Sentence &hyp, const Sentence &ref,
                             int64_t *out) const {
  if (ref.empty()) throw DataError("empty reference line");
  TerSentenceResult r = TerSentence(hyp, ref);
  out[0] = r.insertions;
  out[1] = r.deletions;
  out[2] = r.substitutions;
  out[3] = r.shifts;
  out[4] = static_cast<int64_t>(ref.size());
}

MetricScore TerEvaluator::ScoreFromStats(const int64_t *stats) const {
  MetricScore score;
  score.name = Name();
  int64_t edits = stats[0] + stats[1] + stats[2] + stats[3];
  int64_t ref_len = stats[4];
  score.components["ins"] = stats[0];
  score.components["del"] = stats[1];
  score.components["sub"] = stats[2];
  score.components["shifts"] = stats[3];
  score.components["edits"] = edits;
  score.components["ref_len"] = ref_len;
  if (ref_len == 0) throw DataError("empty reference corpus");
  score.value = 100.0 * static_cast<double>(edits) / ref_len;
  return score;
}

MetricScore CorpusTer(const Corpus &hyps, const Corpus &refs, int threads) {
  return EvaluateCorpus(TerEvaluator(), hyps, refs, threads);
}

}  // namespace btforge
