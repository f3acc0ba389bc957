// src/meteor.cc

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

#include "btforge/meteor.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "btforge/stemmer.h"

namespace btforge {

namespace {

// Occurrence assignment under exact per-class match quotas.  Stage 1
// quotas come from surface equality, stage 2 from stem equality over
// the leftovers, and reference occurrences are reserved per word so
// stage 2 can never starve a stage 1 class.
struct AlignProblem {
  std::vector<uint32_t> hyp_word, ref_word;    // word ids
  std::vector<uint32_t> hyp_stem, ref_stem;    // stem ids
  std::vector<int64_t> quota1;                 // per word id
  std::vector<int64_t> quota2;                 // per stem id
  std::vector<int64_t> ref2_budget;            // per word id, for stage 2
  std::vector<std::vector<uint32_t>> eligible; // per hyp pos, ref pos asc
  std::vector<int64_t> suffix_eligible;        // positions >= h with options
  int64_t target_matches = 0;

  bool Stage1Pair(size_t h, uint32_t r) const {
    return hyp_word[h] == ref_word[r];
  }
};

struct Assignment {
  std::vector<int32_t> hyp_to_ref;  // -1 for unmatched
  int64_t matches = 0;
  int64_t chunks = 0;
};

int64_t CountChunks(const std::vector<int32_t> &hyp_to_ref) {
  int64_t chunks = 0;
  bool prev_matched = false;
  int32_t prev_r = -1;
  for (int32_t r : hyp_to_ref) {
    if (r >= 0) {
      if (!(prev_matched && r == prev_r + 1)) ++chunks;
      prev_matched = true;
      prev_r = r;
    } else {
      prev_matched = false;
    }
  }
  return chunks;
}

// Always reaches the full quota count: stage 1 refs are reserved per
// word, and leftover hyp and ref occurrences of the same word never
// coexist, so an eligible stage 2 partner exists whenever quota
// remains.
Assignment GreedyAssign(const AlignProblem &p) {
  size_t H = p.hyp_word.size(), R = p.ref_word.size();
  Assignment a;
  a.hyp_to_ref.assign(H, -1);
  std::vector<bool> ref_used(R, false);
  std::vector<int64_t> used1(p.quota1.size(), 0), used2(p.quota2.size(), 0);
  std::vector<int64_t> budget = p.ref2_budget;
  for (size_t h = 0; h < H; ++h) {
    uint32_t w = p.hyp_word[h];
    if (used1[w] < p.quota1[w]) {
      for (uint32_t r : p.eligible[h]) {
        if (!ref_used[r] && p.Stage1Pair(h, r)) {
          ref_used[r] = true;
          used1[w] += 1;
          a.hyp_to_ref[h] = static_cast<int32_t>(r);
          a.matches += 1;
          break;
        }
      }
      if (a.hyp_to_ref[h] >= 0) continue;
    }
    uint32_t s = p.hyp_stem[h];
    if (used2[s] < p.quota2[s]) {
      for (uint32_t r : p.eligible[h]) {
        if (!ref_used[r] && !p.Stage1Pair(h, r) && budget[p.ref_word[r]] > 0) {
          ref_used[r] = true;
          used2[s] += 1;
          budget[p.ref_word[r]] -= 1;
          a.hyp_to_ref[h] = static_cast<int32_t>(r);
          a.matches += 1;
          break;
        }
      }
    }
  }
  a.chunks = CountChunks(a.hyp_to_ref);
  return a;
}

struct Searcher {
  const AlignProblem &p;
  size_t H, R;
  uint64_t ref_mask = 0;
  std::vector<int64_t> used1, used2, budget;
  int64_t matched = 0;
  int64_t best_chunks;
  size_t nodes = 0;
  bool aborted = false;
  static constexpr size_t kNodeCap = 200000;

  explicit Searcher(const AlignProblem &prob, int64_t initial_best)
      : p(prob), H(prob.hyp_word.size()), R(prob.ref_word.size()),
        used1(prob.quota1.size(), 0), used2(prob.quota2.size(), 0),
        budget(prob.ref2_budget), best_chunks(initial_best) {}

  void Run(size_t h, int64_t chunks, bool prev_matched, int32_t prev_r) {
    if (aborted || chunks >= best_chunks) return;
    if (++nodes > kNodeCap) {
      aborted = true;
      return;
    }
    if (h == H) {
      if (matched == p.target_matches) best_chunks = chunks;
      return;
    }
    if (matched + p.suffix_eligible[h] < p.target_matches) return;
    uint32_t w = p.hyp_word[h], s = p.hyp_stem[h];
    // Continuing the current run first steers the search toward
    // low-chunk solutions early.
    auto try_ref = [&](uint32_t r) {
      if (ref_mask & (1ull << r)) return;
      bool stage1 = p.Stage1Pair(h, r);
      if (stage1) {
        if (used1[w] >= p.quota1[w]) return;
        used1[w] += 1;
      } else {
        if (used2[s] >= p.quota2[s] || budget[p.ref_word[r]] <= 0) return;
        used2[s] += 1;
        budget[p.ref_word[r]] -= 1;
      }
      ref_mask |= 1ull << r;
      matched += 1;
      bool cont = prev_matched && static_cast<int32_t>(r) == prev_r + 1;
      Run(h + 1, chunks + (cont ? 0 : 1), true, static_cast<int32_t>(r));
      matched -= 1;
      ref_mask &= ~(1ull << r);
      if (stage1) {
        used1[w] -= 1;
      } else {
        used2[s] -= 1;
        budget[p.ref_word[r]] += 1;
      }
    };
    if (prev_matched && prev_r + 1 < static_cast<int32_t>(R)) {
      uint32_t cont_r = static_cast<uint32_t>(prev_r + 1);
      const auto &el = p.eligible[h];
      if (std::binary_search(el.begin(), el.end(), cont_r)) try_ref(cont_r);
    }
    for (uint32_t r : p.eligible[h]) {
      if (prev_matched && static_cast<int32_t>(r) == prev_r + 1) continue;
      try_ref(r);
    }
    Run(h + 1, chunks, false, -1);
  }
};

}  // namespace

MeteorLineAlignment MeteorAlign(const Sentence &hyp, const Sentence &ref) {
  std::unordered_map<std::string, uint32_t> word_ids, stem_ids;
  auto intern = [](std::unordered_map<std::string, uint32_t> *ids,
                   const std::string &s) {
    auto [it, unused] = ids->emplace(s, static_cast<uint32_t>(ids->size()));
    return it->second;
  };
  AlignProblem p;
  for (const Token &t : hyp) {
    p.hyp_word.push_back(intern(&word_ids, t));
    p.hyp_stem.push_back(intern(&stem_ids, Stem(t)));
  }
  for (const Token &t : ref) {
    p.ref_word.push_back(intern(&word_ids, t));
    p.ref_stem.push_back(intern(&stem_ids, Stem(t)));
  }
  size_t W = word_ids.size(), S = stem_ids.size();
  std::vector<int64_t> hyp_w(W, 0), ref_w(W, 0);
  for (uint32_t w : p.hyp_word) hyp_w[w] += 1;
  for (uint32_t w : p.ref_word) ref_w[w] += 1;
  p.quota1.assign(W, 0);
  p.ref2_budget.assign(W, 0);
  std::vector<uint32_t> word_stem(W, 0);
  for (size_t h = 0; h < p.hyp_word.size(); ++h)
    word_stem[p.hyp_word[h]] = p.hyp_stem[h];
  for (size_t r = 0; r < p.ref_word.size(); ++r)
    word_stem[p.ref_word[r]] = p.ref_stem[r];
  std::vector<int64_t> hyp_left(S, 0), ref_left(S, 0);
  for (uint32_t w = 0; w < W; ++w) {
    p.quota1[w] = std::min(hyp_w[w], ref_w[w]);
    p.ref2_budget[w] = ref_w[w] - p.quota1[w];
    hyp_left[word_stem[w]] += hyp_w[w] - p.quota1[w];
    ref_left[word_stem[w]] += ref_w[w] - p.quota1[w];
  }
  p.quota2.assign(S, 0);
  for (uint32_t s = 0; s < S; ++s)
    p.quota2[s] = std::min(hyp_left[s], ref_left[s]);
  p.target_matches = 0;
  for (int64_t q : p.quota1) p.target_matches += q;
  for (int64_t q : p.quota2) p.target_matches += q;

  p.eligible.resize(p.hyp_word.size());
  for (size_t h = 0; h < p.hyp_word.size(); ++h) {
    for (uint32_t r = 0; r < p.ref_word.size(); ++r) {
      if (p.hyp_word[h] == p.ref_word[r] || p.hyp_stem[h] == p.ref_stem[r])
        p.eligible[h].push_back(r);
    }
  }
  p.suffix_eligible.assign(p.hyp_word.size() + 1, 0);
  for (size_t h = p.hyp_word.size(); h-- > 0;) {
    p.suffix_eligible[h] =
        p.suffix_eligible[h + 1] + (p.eligible[h].empty() ? 0 : 1);
  }

  Assignment greedy = GreedyAssign(p);
  MeteorLineAlignment out;
  out.matches = p.target_matches;
  out.chunks = greedy.chunks;
  if (p.target_matches == 0) {
    out.chunks = 0;
    return out;
  }
  if (p.ref_word.size() <= 64) {
    Searcher searcher(p, greedy.chunks);
    searcher.Run(0, 0, false, -1);
    if (!searcher.aborted) out.chunks = searcher.best_chunks;
    else out.chunks = std::min(greedy.chunks, searcher.best_chunks);
  }
  return out;
}

void MeteorEvaluator::LineStats(const Sentence &hyp, const Sentence &ref,
                                int64_t *out) const {
  MeteorLineAlignment a = MeteorAlign(hyp, ref);
  out[0] = a.matches;
  out[1] = a.chunks;
  out[2] = static_cast<int64_t>(hyp.size());
  out[3] = static_cast<int64_t>(ref.size());
}

MetricScore MeteorEvaluator::ScoreFromStats(const int64_t *stats) const {
  MetricScore score;
  score.name = Name();
  int64_t matches = stats[0], chunks = stats[1];
  int64_t hyp_len = stats[2], ref_len = stats[3];
  score.components["matches"] = matches;
  score.components["chunks"] = chunks;
  score.components["hyp_len"] = hyp_len;
  score.components["ref_len"] = ref_len;
  score.components["alpha"] = kAlpha;
  score.components["beta"] = kBetaExp;
  score.components["gamma"] = kGamma;
  if (matches == 0 || hyp_len == 0 || ref_len == 0) {
    score.value = 0.0;
    return score;
  }
  double P = static_cast<double>(matches) / hyp_len;
  double R = static_cast<double>(matches) / ref_len;
  double F = P * R / (kAlpha * P + (1.0 - kAlpha) * R);
  double frag = static_cast<double>(chunks) / matches;
  double penalty = kGamma * std::pow(frag, kBetaExp);
  score.value = 100.0 * F * (1.0 - penalty);
  return score;
}

MetricScore CorpusMeteor(const Corpus &hyps, const Corpus &refs, int threads) {
  return EvaluateCorpus(MeteorEvaluator(), hyps, refs, threads);
}

}  // namespace btforge
