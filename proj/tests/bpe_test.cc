// tests/bpe_test.cc

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

#include "btforge/bpe.h"

#include <random>
#include <string>
#include <vector>

#include "btforge/line_io.h"
#include "doctest.h"
#include "test_util.h"

using namespace btforge;

namespace {

Corpus Repeat(const std::string &word, int times) {
  Corpus c;
  for (int i = 0; i < times; ++i) c.push_back({word});
  return c;
}

using Merge = std::pair<std::string, std::string>;

}  // namespace

TEST_CASE("single-pair corpus learns its one merge") {
  BpeModel model = LearnBpe(Repeat("ab", 3), {}, 1);
  REQUIRE(model.merges.size() == 1);
  CHECK(model.merges[0] == Merge{"a", "b</w>"});
}

TEST_CASE("zero budget learns nothing") {
  BpeModel model = LearnBpe(Repeat("ab", 3), {}, 0);
  CHECK(model.merges.empty());
}

TEST_CASE("merge order on a two-word corpus") {
  Corpus corpus = Repeat("low", 5);
  for (int i = 0; i < 2; ++i) corpus.push_back({"lower"});

  BpeModel two = LearnBpe(corpus, {}, 2);
  REQUIRE(two.merges.size() == 2);
  CHECK(two.merges[0] == Merge{"l", "o"});
  CHECK(two.merges[1] == Merge{"lo", "w</w>"});

  // A large budget runs until no pair occurs twice.
  BpeModel ten = LearnBpe(corpus, {}, 10);
  REQUIRE(ten.merges.size() == 5);
  CHECK(ten.merges[0] == Merge{"l", "o"});
  CHECK(ten.merges[1] == Merge{"lo", "w</w>"});
  CHECK(ten.merges[2] == Merge{"e", "r</w>"});
  CHECK(ten.merges[3] == Merge{"lo", "w"});
  CHECK(ten.merges[4] == Merge{"low", "er</w>"});
}

TEST_CASE("learning pools both corpora") {
  BpeModel model = LearnBpe(Repeat("ab", 1), Repeat("ab", 2), 1);
  REQUIRE(model.merges.size() == 1);
  CHECK(model.merges[0] == Merge{"a", "b</w>"});
}

TEST_CASE("application follows the learned merge order") {
  BpeModel empty;
  CHECK(ApplyBpe(empty, {"ab"}) == Sentence{"a@@", "b"});

  BpeModel ab;
  ab.merges = {{"a", "b</w>"}};
  CHECK(ApplyBpe(ab, {"ab"}) == Sentence{"ab"});

  Corpus corpus = Repeat("low", 5);
  for (int i = 0; i < 2; ++i) corpus.push_back({"lower"});
  BpeModel two = LearnBpe(corpus, {}, 2);
  CHECK(ApplyBpe(two, {"lowest"}) ==
        Sentence{"lo@@", "w@@", "e@@", "s@@", "t"});
}

TEST_CASE("undo joins continuation pieces") {
  CHECK(UndoBpe({"a@@", "b"}) == Sentence{"ab"});
  CHECK(UndoBpe({"ab"}) == Sentence{"ab"});
  CHECK(UndoBpe({}) == Sentence{});
  CHECK(UndoBpe({"a@@", "b@@", "c", "d"}) == Sentence{"abc", "d"});
  CHECK_THROWS_AS(UndoBpe({"a@@"}), DataError);
  CHECK_THROWS_AS(UndoBpe({"x", "a@@"}), DataError);
}

TEST_CASE("model files round trip and reject malformed content") {
  Corpus corpus = Repeat("low", 5);
  corpus.push_back({"lower"});
  BpeModel model = LearnBpe(corpus, {}, 4);
  std::string text = model.Serialize();
  CHECK(text.rfind("#btforge-bpe v1\n", 0) == 0);
  BpeModel back = BpeModel::Parse(text);
  CHECK(back.merges == model.merges);
  CHECK(back.Serialize() == text);

  CHECK_THROWS_AS(BpeModel::Parse("l o\n"), DataError);  // missing header
  CHECK_THROWS_AS(BpeModel::Parse("#btforge-bpe v1\nnospace\n"), DataError);
  CHECK_THROWS_AS(BpeModel::Parse("#btforge-bpe v1\na b c\n"), DataError);
}

TEST_CASE("budget growth extends the merge list without rewriting it") {
  std::mt19937_64 gen(11);
  std::vector<std::string> vocab = {"river", "rivers", "driver", "drive",
                                    "riv",   "vera",   "aa",     "b"};
  for (int iter = 0; iter < 20; ++iter) {
    Corpus corpus;
    std::uniform_int_distribution<size_t> lines(1, 12);
    size_t count = lines(gen);
    for (size_t i = 0; i < count; ++i)
      corpus.push_back(btforge_test::RandomSentence(gen, 1, 6, vocab));
    for (size_t k : {0u, 1u, 3u, 7u}) {
      BpeModel small = LearnBpe(corpus, {}, k);
      BpeModel big = LearnBpe(corpus, {}, k + 1);
      REQUIRE(small.merges.size() <= big.merges.size());
      for (size_t i = 0; i < small.merges.size(); ++i)
        CHECK(small.merges[i] == big.merges[i]);
    }
  }
}

TEST_CASE("segmentation always undoes back to the original tokens") {
  std::mt19937_64 gen(13);
  std::vector<std::string> vocab = {"the",  "cat",   "cats", "concatenate",
                                    "a",    "ab",    "abc",  "xyzzy",
                                    "lo",   "low",   "lower", "lowest"};
  Corpus corpus;
  for (int i = 0; i < 300; ++i)
    corpus.push_back(btforge_test::RandomSentence(gen, 0, 8, vocab));
  for (size_t budget : {0u, 5u, 50u}) {
    BpeModel model = LearnBpe(corpus, {}, budget);
    BpeEncoder encoder(model);
    for (const Sentence &s : corpus) {
      CHECK(UndoBpe(encoder.EncodeSentence(s)) == s);
    }
  }
}
