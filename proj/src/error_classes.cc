// src/error_classes.cc

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

#include "btforge/error_classes.h"

#include <unordered_map>

#include "btforge/line_io.h"
#include "btforge/parallel.h"
#include "btforge/stemmer.h"
#include "btforge/wer_align.h"

namespace btforge {

const char *ErrorClassName(int id) {
  switch (id) {
    case kMorphError: return "morph";
    case kOrderError: return "order";
    case kOmissionError: return "omission";
    case kAdditionError: return "addition";
    case kMistranslationError: return "mistranslation";
    default: return "none";
  }
}

ErrorCounts &ErrorCounts::operator+=(const ErrorCounts &o) {
  for (int c = 0; c < kNumErrorClasses; ++c) {
    ref[c] += o.ref[c];
    hyp[c] += o.hyp[c];
  }
  ref_tokens += o.ref_tokens;
  hyp_tokens += o.hyp_tokens;
  return *this;
}

namespace {

// Marks the tokens of |side| that are errors in the bag-of-words sense:
// occurrences of a word beyond the count available on the other side.
// Positionally matched occurrences claim the budget first, the rest is
// handed out left to right.
std::vector<bool> BagResidue(const Sentence &side,
                             const std::vector<bool> &matched,
                             const Sentence &other) {
  std::unordered_map<std::string, int64_t> budget;
  for (const Token &w : other) ++budget[w];
  std::vector<bool> residue(side.size(), false);
  for (size_t i = 0; i < side.size(); ++i) {
    if (matched[i]) --budget[side[i]];
  }
  for (size_t i = 0; i < side.size(); ++i) {
    if (matched[i]) continue;
    int64_t &b = budget[side[i]];
    if (b > 0) {
      --b;
    } else {
      residue[i] = true;
    }
  }
  return residue;
}

}  // namespace

SentenceErrors ClassifyErrors(const Sentence &ref, const Sentence &hyp) {
  WerAlignment align = WerAlign(ref, hyp);

  std::vector<EditOp> ref_op(ref.size(), EditOp::kMatch);
  std::vector<EditOp> hyp_op(hyp.size(), EditOp::kMatch);
  for (const AlignStep &s : align.steps) {
    if (s.ref_index != AlignStep::npos) ref_op[s.ref_index] = s.op;
    if (s.hyp_index != AlignStep::npos) hyp_op[s.hyp_index] = s.op;
  }
  std::vector<bool> ref_matched(ref.size()), hyp_matched(hyp.size());
  for (size_t i = 0; i < ref.size(); ++i)
    ref_matched[i] = ref_op[i] == EditOp::kMatch;
  for (size_t j = 0; j < hyp.size(); ++j)
    hyp_matched[j] = hyp_op[j] == EditOp::kMatch;

  std::vector<bool> ref_residue = BagResidue(ref, ref_matched, hyp);
  std::vector<bool> hyp_residue = BagResidue(hyp, hyp_matched, ref);

  SentenceErrors out;
  out.ref_label.assign(ref.size(), kNoError);
  out.hyp_label.assign(hyp.size(), kNoError);

  // Residue words on both sides that share a stem are inflection
  // variants of each other, not independent errors.  Pair them off
  // greedily, leftmost first.
  std::vector<bool> hyp_taken(hyp.size(), false);
  for (size_t i = 0; i < ref.size(); ++i) {
    if (ref_matched[i] || !ref_residue[i]) continue;
    const std::string ref_stem = Stem(ref[i]);
    for (size_t j = 0; j < hyp.size(); ++j) {
      if (hyp_matched[j] || !hyp_residue[j] || hyp_taken[j]) continue;
      if (Stem(hyp[j]) == ref_stem) {
        out.ref_label[i] = kMorphError;
        out.hyp_label[j] = kMorphError;
        hyp_taken[j] = true;
        break;
      }
    }
  }

  for (size_t i = 0; i < ref.size(); ++i) {
    if (ref_matched[i] || out.ref_label[i] != kNoError) continue;
    if (!ref_residue[i]) {
      out.ref_label[i] = kOrderError;
    } else if (ref_op[i] == EditOp::kDelete) {
      out.ref_label[i] = kOmissionError;
    } else {
      out.ref_label[i] = kMistranslationError;
    }
  }
  for (size_t j = 0; j < hyp.size(); ++j) {
    if (hyp_matched[j] || out.hyp_label[j] != kNoError) continue;
    if (!hyp_residue[j]) {
      out.hyp_label[j] = kOrderError;
    } else if (hyp_op[j] == EditOp::kInsert) {
      out.hyp_label[j] = kAdditionError;
    } else {
      out.hyp_label[j] = kMistranslationError;
    }
  }

  out.counts.ref_tokens = static_cast<int64_t>(ref.size());
  out.counts.hyp_tokens = static_cast<int64_t>(hyp.size());
  for (uint8_t c : out.ref_label)
    if (c != kNoError) ++out.counts.ref[c];
  for (uint8_t c : out.hyp_label)
    if (c != kNoError) ++out.counts.hyp[c];
  return out;
}

ErrorCounts CountCorpusErrors(const Corpus &refs, const Corpus &hyps,
                              int threads) {
  if (refs.size() != hyps.size())
    throw DataError("corpus sizes differ: " + std::to_string(refs.size()) +
                    " vs " + std::to_string(hyps.size()));
  std::vector<ErrorCounts> per_line(refs.size());
  ParallelFor(refs.size(), threads, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
      per_line[i] = ClassifyErrors(refs[i], hyps[i]).counts;
  });
  ErrorCounts total;
  for (const ErrorCounts &c : per_line) total += c;
  return total;
}

std::map<std::string, double> ErrorRates(const ErrorCounts &counts) {
  if (counts.ref_tokens == 0 || counts.hyp_tokens == 0)
    throw DataError("error rates need non-empty reference and hypothesis");
  auto side = [](int64_t n, int64_t total) {
    return 100.0 * static_cast<double>(n) / static_cast<double>(total);
  };
  std::map<std::string, double> rates;
  for (int c : {kMorphError, kOrderError, kMistranslationError}) {
    rates[ErrorClassName(c)] = 0.5 * (side(counts.ref[c], counts.ref_tokens) +
                                      side(counts.hyp[c], counts.hyp_tokens));
  }
  rates[ErrorClassName(kOmissionError)] =
      side(counts.ref[kOmissionError], counts.ref_tokens);
  rates[ErrorClassName(kAdditionError)] =
      side(counts.hyp[kAdditionError], counts.hyp_tokens);
  return rates;
}

}  // namespace btforge
