// tests/corpus_ops_test.cc

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

#include <map>
#include <string>

#include "btforge/line_io.h"
#include "doctest.h"

using namespace btforge;

namespace {

// Two corpora over the same target side whose sources identify their
// origin, so block assignment is visible in the output.
ParallelCorpus NumberedCorpus(const std::string &tag, size_t n) {
  ParallelCorpus c;
  for (size_t i = 0; i < n; ++i) {
    c.source.push_back(tag + "-src-" + std::to_string(i));
    c.target.push_back("tgt-" + std::to_string(i));
    c.provenance.push_back(tag);
  }
  return c;
}

}  // namespace

TEST_CASE("alternating mix follows block parity") {
  ParallelCorpus a = NumberedCorpus("a", 30);
  ParallelCorpus b = NumberedCorpus("b", 30);
  MixPlan plan;
  plan.block_size = 6;

  ParallelCorpus out = MixAlternating(a, b, plan);
  REQUIRE(out.size() == 30);
  for (size_t i = 0; i < 30; ++i) {
    bool from_a = (i / 6) % 2 == 0;
    const ParallelCorpus &expect = from_a ? a : b;
    CHECK(out.source[i] == expect.source[i]);
    CHECK(out.provenance[i] == expect.provenance[i]);
    CHECK(out.target[i] == a.target[i]);
  }

  plan.a_first = false;
  ParallelCorpus flipped = MixAlternating(a, b, plan);
  for (size_t i = 0; i < 30; ++i) {
    bool from_b = (i / 6) % 2 == 0;
    CHECK(flipped.source[i] == (from_b ? b : a).source[i]);
  }
}

TEST_CASE("alternating mix validates its inputs") {
  ParallelCorpus a = NumberedCorpus("a", 4);
  ParallelCorpus b = NumberedCorpus("b", 4);
  MixPlan plan;
  plan.block_size = 2;

  ParallelCorpus short_b = NumberedCorpus("b", 3);
  CHECK_THROWS_AS(MixAlternating(a, short_b, plan), DataError);

  ParallelCorpus other_targets = NumberedCorpus("b", 4);
  other_targets.target[2] = "something else";
  CHECK_THROWS_AS(MixAlternating(a, other_targets, plan), DataError);

  plan.block_size = 0;
  CHECK_THROWS_AS(MixAlternating(a, b, plan), DataError);
}

TEST_CASE("target equality check compares tokens, not bytes") {
  ParallelCorpus a = NumberedCorpus("a", 2);
  ParallelCorpus b = NumberedCorpus("b", 2);
  b.target[0] = "  " + b.target[0] + " ";
  MixPlan plan;
  plan.block_size = 1;
  ParallelCorpus out = MixAlternating(a, b, plan);
  CHECK(out.size() == 2);
}

TEST_CASE("full mix duplicates every target") {
  ParallelCorpus a = NumberedCorpus("a", 5);
  ParallelCorpus b = NumberedCorpus("b", 5);
  ParallelCorpus out = MixFull(a, b);
  REQUIRE(out.size() == 10);

  std::map<std::string, int> target_count;
  for (const std::string &t : out.target) ++target_count[t];
  for (const auto &[target, count] : target_count) {
    (void)target;
    CHECK(count == 2);
  }
  for (size_t i = 0; i < 5; ++i) {
    CHECK(out.source[i] == a.source[i]);
    CHECK(out.source[5 + i] == b.source[i]);
    CHECK(out.provenance[i] == "a");
    CHECK(out.provenance[5 + i] == "b");
  }
}

TEST_CASE("sampling partitions the corpus deterministically") {
  ParallelCorpus c = NumberedCorpus("c", 100);

  SampleSplit split = SampleLines(c, 40, 123);
  CHECK(split.sample.size() == 40);
  CHECK(split.rest.size() == 60);

  // Both parts keep original relative order, so merging them by source
  // id recovers the corpus exactly.
  size_t ai = 0, bi = 0;
  for (size_t i = 0; i < 100; ++i) {
    if (ai < split.sample.size() && split.sample.source[ai] == c.source[i]) {
      ++ai;
    } else {
      REQUIRE(bi < split.rest.size());
      CHECK(split.rest.source[bi] == c.source[i]);
      ++bi;
    }
  }
  CHECK(ai == split.sample.size());
  CHECK(bi == split.rest.size());

  SampleSplit again = SampleLines(c, 40, 123);
  CHECK(again.sample.source == split.sample.source);
  CHECK(again.rest.source == split.rest.source);

  SampleSplit other_seed = SampleLines(c, 40, 124);
  CHECK(other_seed.sample.source != split.sample.source);
}

TEST_CASE("sampling edge cases") {
  ParallelCorpus c = NumberedCorpus("c", 10);
  SampleSplit none = SampleLines(c, 0, 1);
  CHECK(none.sample.size() == 0);
  CHECK(none.rest.size() == 10);

  SampleSplit all = SampleLines(c, 10, 1);
  CHECK(all.sample.size() == 10);
  CHECK(all.rest.size() == 0);
  CHECK(all.sample.source == c.source);

  CHECK_THROWS_AS(SampleLines(c, 11, 1), DataError);
}

TEST_CASE("length statistics") {
  LengthStats stats = ComputeLengthStats({"a b", "c", "", "d e f"});
  CHECK(stats.sentences == 4);
  CHECK(stats.tokens == 6);
  CHECK(stats.mean == doctest::Approx(1.5));
  CHECK(stats.histogram ==
        std::map<size_t, size_t>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});

  LengthStats empty_line = ComputeLengthStats({""});
  CHECK(empty_line.sentences == 1);
  CHECK(empty_line.mean == 0.0);
  CHECK(empty_line.histogram == std::map<size_t, size_t>{{0, 1}});

  CHECK_THROWS_AS(ComputeLengthStats({}), DataError);
}
