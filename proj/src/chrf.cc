// src/chrf.cc

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

#include "btforge/chrf.h"

#include <unordered_map>

#include "btforge/text.h"

namespace btforge {

namespace {

// Code points of all tokens run together; inter-token whitespace does
// not participate in n-grams.
std::u32string CharStream(const Sentence &sent) {
  std::u32string out;
  for (const Token &tok : sent) {
    for (uint32_t cp : DecodeString(tok))
      out.push_back(static_cast<char32_t>(cp));
  }
  return out;
}

}  // namespace

// Stats row: per order n in 1..max_n the triple (clipped match, hyp
// total, ref total), grouped as all matches, all hyp totals, all ref
// totals.
void ChrfEvaluator::LineStats(const Sentence &hyp, const Sentence &ref,
                              int64_t *out) const {
  std::u32string hs = CharStream(hyp);
  std::u32string rs = CharStream(ref);
  for (int n = 1; n <= max_n_; ++n) {
    std::unordered_map<std::u32string, int64_t> hyp_counts, ref_counts;
    if (hs.size() >= static_cast<size_t>(n))
      for (size_t i = 0; i + n <= hs.size(); ++i)
        hyp_counts[hs.substr(i, n)] += 1;
    if (rs.size() >= static_cast<size_t>(n))
      for (size_t i = 0; i + n <= rs.size(); ++i)
        ref_counts[rs.substr(i, n)] += 1;
    int64_t match = 0, hyp_total = 0, ref_total = 0;
    for (const auto &[gram, count] : hyp_counts) {
      hyp_total += count;
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) match += std::min(count, it->second);
    }
    for (const auto &[gram, count] : ref_counts) ref_total += count;
    out[n - 1] = match;
    out[max_n_ + n - 1] = hyp_total;
    out[2 * max_n_ + n - 1] = ref_total;
  }
}

MetricScore ChrfEvaluator::ScoreFromStats(const int64_t *stats) const {
  MetricScore score;
  score.name = Name();
  double prec_sum = 0.0, rec_sum = 0.0;
  for (int n = 1; n <= max_n_; ++n) {
    int64_t match = stats[n - 1];
    int64_t hyp_total = stats[max_n_ + n - 1];
    int64_t ref_total = stats[2 * max_n_ + n - 1];
    double p = hyp_total > 0 ? static_cast<double>(match) / hyp_total : 0.0;
    double r = ref_total > 0 ? static_cast<double>(match) / ref_total : 0.0;
    prec_sum += p;
    rec_sum += r;
    score.components["p" + std::to_string(n)] = p;
    score.components["r" + std::to_string(n)] = r;
  }
  double chr_p = prec_sum / max_n_;
  double chr_r = rec_sum / max_n_;
  score.components["chrP"] = chr_p;
  score.components["chrR"] = chr_r;
  score.components["beta"] = beta_;
  double b2 = beta_ * beta_;
  double denom = b2 * chr_p + chr_r;
  score.value = denom > 0.0 ? 100.0 * (1.0 + b2) * chr_p * chr_r / denom : 0.0;
  return score;
}

MetricScore CorpusChrf(const Corpus &hyps, const Corpus &refs, int threads) {
  return EvaluateCorpus(ChrfEvaluator(), hyps, refs, threads);
}

}  // namespace btforge
