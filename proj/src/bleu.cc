// src/bleu.cc

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

#include "btforge/bleu.h"

#include <cmath>
#include <cstring>
#include <unordered_map>

namespace btforge {

namespace {

constexpr int kMaxOrder = 4;
constexpr uint32_t kPad = 0xFFFFFFFFu;

struct NgramKey {
  uint32_t w[kMaxOrder];
  bool operator==(const NgramKey &o) const {
    return std::memcmp(w, o.w, sizeof(w)) == 0;
  }
};

struct NgramKeyHash {
  size_t operator()(const NgramKey &k) const {
    uint64_t h = 1469598103934665603ull;  // FNV-1a over the id words
    for (uint32_t v : k.w) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

typedef std::unordered_map<NgramKey, int64_t, NgramKeyHash> NgramCounts;

void CountNgrams(const std::vector<uint32_t> &ids, int n, NgramCounts *out) {
  if (ids.size() < static_cast<size_t>(n)) return;
  for (size_t i = 0; i + n <= ids.size(); ++i) {
    NgramKey key;
    for (int j = 0; j < kMaxOrder; ++j)
      key.w[j] = j < n ? ids[i + j] : kPad;
    (*out)[key] += 1;
  }
}

std::vector<uint32_t> Intern(const Sentence &sent,
                             std::unordered_map<std::string, uint32_t> *ids) {
  std::vector<uint32_t> out;
  out.reserve(sent.size());
  for (const Token &t : sent) {
    auto [it, unused] = ids->emplace(t, static_cast<uint32_t>(ids->size()));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

// Stats row: clipped matches 1..4, hyp n-gram totals 1..4, hyp_len,
// ref_len.
void BleuEvaluator::LineStats(const Sentence &hyp, const Sentence &ref,
                              int64_t *out) const {
  std::unordered_map<std::string, uint32_t> vocab;
  std::vector<uint32_t> hid = Intern(hyp, &vocab);
  std::vector<uint32_t> rid = Intern(ref, &vocab);
  for (int n = 1; n <= kMaxOrder; ++n) {
    NgramCounts hyp_counts, ref_counts;
    CountNgrams(hid, n, &hyp_counts);
    CountNgrams(rid, n, &ref_counts);
    int64_t match = 0, total = 0;
    for (const auto &[key, count] : hyp_counts) {
      total += count;
      auto it = ref_counts.find(key);
      if (it != ref_counts.end()) match += std::min(count, it->second);
    }
    out[n - 1] = match;
    out[kMaxOrder + n - 1] = total;
  }
  out[8] = static_cast<int64_t>(hyp.size());
  out[9] = static_cast<int64_t>(ref.size());
}

MetricScore BleuEvaluator::ScoreFromStats(const int64_t *stats) const {
  MetricScore score;
  score.name = Name();
  int64_t hyp_len = stats[8], ref_len = stats[9];
  double log_sum = 0.0;
  bool zero = false;
  for (int n = 1; n <= kMaxOrder; ++n) {
    int64_t match = stats[n - 1], total = stats[kMaxOrder + n - 1];
    double p = total > 0 ? static_cast<double>(match) / total : 0.0;
    score.components["p" + std::to_string(n)] = p;
    score.components["match_" + std::to_string(n)] = match;
    score.components["total_" + std::to_string(n)] = total;
    if (p > 0.0)
      log_sum += std::log(p);
    else
      zero = true;
  }
  double bp = 1.0;
  if (hyp_len == 0)
    bp = 0.0;
  else if (hyp_len < ref_len)
    bp = std::exp(1.0 - static_cast<double>(ref_len) / hyp_len);
  score.components["bp"] = bp;
  score.components["hyp_len"] = hyp_len;
  score.components["ref_len"] = ref_len;
  score.value = zero ? 0.0 : 100.0 * bp * std::exp(log_sum / kMaxOrder);
  return score;
}

MetricScore CorpusBleu(const Corpus &hyps, const Corpus &refs, int threads) {
  return EvaluateCorpus(BleuEvaluator(), hyps, refs, threads);
}

}  // namespace btforge
