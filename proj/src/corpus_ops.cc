// src/corpus_ops.cc

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

#include "btforge/corpus_ops.h"

#include <numeric>

#include "btforge/line_io.h"
#include "btforge/rng.h"
#include "btforge/text.h"

namespace btforge {

namespace {

void CheckAligned(const ParallelCorpus &a, const ParallelCorpus &b) {
  if (a.size() != b.size())
    throw DataError("corpus size mismatch: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + " lines");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.target[i] != b.target[i] &&
        SplitWhitespace(a.target[i]) != SplitWhitespace(b.target[i]))
      throw DataError("target sides differ at line " + std::to_string(i + 1));
  }
}

}  // namespace

ParallelCorpus MixAlternating(const ParallelCorpus &a, const ParallelCorpus &b,
                              const MixPlan &plan) {
  if (plan.block_size == 0) throw DataError("block size must be positive");
  CheckAligned(a, b);
  ParallelCorpus out;
  out.source.reserve(a.size());
  out.target = a.target;
  out.provenance.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    bool even_block = (i / plan.block_size) % 2 == 0;
    const ParallelCorpus &pick = (even_block == plan.a_first) ? a : b;
    out.source.push_back(pick.source[i]);
    out.provenance.push_back(pick.provenance[i]);
  }
  return out;
}

ParallelCorpus MixFull(const ParallelCorpus &a, const ParallelCorpus &b) {
  CheckAligned(a, b);
  ParallelCorpus out;
  out.source.reserve(2 * a.size());
  out.target.reserve(2 * a.size());
  out.provenance.reserve(2 * a.size());
  for (const ParallelCorpus *c : {&a, &b}) {
    out.source.insert(out.source.end(), c->source.begin(), c->source.end());
    out.target.insert(out.target.end(), c->target.begin(), c->target.end());
    out.provenance.insert(out.provenance.end(), c->provenance.begin(),
                          c->provenance.end());
  }
  return out;
}

SampleSplit SampleLines(const ParallelCorpus &c, size_t k, uint64_t seed) {
  size_t n = c.size();
  if (k > n)
    throw DataError("cannot sample " + std::to_string(k) + " of " +
                    std::to_string(n) + " lines");
  // Partial Fisher-Yates over the index array; the first k slots are
  // the sample, re-sorted so both parts keep corpus order.
  std::vector<uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  Rng rng(seed);
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + static_cast<size_t>(rng.Bounded(n - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<bool> selected(n, false);
  for (size_t i = 0; i < k; ++i) selected[idx[i]] = true;
  SampleSplit split;
  for (size_t i = 0; i < n; ++i) {
    ParallelCorpus &dst = selected[i] ? split.sample : split.rest;
    dst.source.push_back(c.source[i]);
    dst.target.push_back(c.target[i]);
    dst.provenance.push_back(c.provenance[i]);
  }
  return split;
}

LengthStats ComputeLengthStats(const std::vector<std::string> &lines) {
  if (lines.empty()) throw DataError("no sentences");
  LengthStats stats;
  stats.sentences = lines.size();
  for (const std::string &line : lines) {
    size_t len = SplitWhitespace(line).size();
    stats.tokens += len;
    stats.histogram[len] += 1;
  }
  stats.mean = static_cast<double>(stats.tokens) /
               static_cast<double>(stats.sentences);
  return stats;
}

}  // namespace btforge
