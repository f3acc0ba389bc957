// tests/pos_variety_test.cc

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

#include <random>
#include <string>
#include <vector>

#include "btforge/line_io.h"
#include "btforge/pos_tagger.h"
#include "btforge/variety.h"
#include "doctest.h"
#include "test_util.h"

using namespace btforge;
using btforge_test::MakeCorpus;

namespace {

std::vector<std::string> TagNames(const Sentence &tokens) {
  std::vector<std::string> out;
  for (PosTag t : CoarseTag(tokens)) out.push_back(PosTagName(t));
  return out;
}

}  // namespace

TEST_CASE("rule tagger on a full sentence") {
  Sentence tokens = {"The",  "quick",   "dogs",    "quickly", "jumped",
                     "over", "123",     "fences",  ",",       "while",
                     "she",  "was",     "running", "towards", "a",
                     "famous", "massive", "objective", "houses", "!"};
  std::vector<std::string> expect = {
      "DET",  "NOUN", "NOUN", "ADV",  "VERB", "ADP", "NUM",
      "NOUN", "PUNCT", "CONJ", "PRON", "NOUN", "VERB", "ADP",
      "DET",  "ADJ",  "ADJ",  "ADJ",  "NOUN", "PUNCT"};
  CHECK(TagNames(tokens) == expect);
}

TEST_CASE("closed classes win over suffix rules") {
  // "during" ends in -ing but is an adposition by lexicon.
  CHECK(TagNames({"during"}) == std::vector<std::string>{"ADP"});
  CHECK(TagNames({"THE"}) == std::vector<std::string>{"DET"});
  CHECK(TagNames({"Not", "n't", "'s"}) ==
        std::vector<std::string>({"PRT", "PRT", "PRT"}));
}

TEST_CASE("bare suffixes are not their own match") {
  CHECK(TagNames({"ly", "ed", "ing", "ous"}) ==
        std::vector<std::string>({"NOUN", "NOUN", "NOUN", "NOUN"}));
}

TEST_CASE("numerals and punctuation") {
  CHECK(TagNames({"3.14", "1,000", "-5", "50%", "2/3"}) ==
        std::vector<std::string>({"NUM", "NUM", "NUM", "NUM", "NUM"}));
  CHECK(TagNames({"...", "-", "?!", "(", "\""}) ==
        std::vector<std::string>({"PUNCT", "PUNCT", "PUNCT", "PUNCT",
                                  "PUNCT"}));
  // Needs a digit to be a numeral; bare separators are punctuation.
  CHECK(TagNames({".", ","}) == std::vector<std::string>({"PUNCT", "PUNCT"}));
  CHECK(TagNames({"x1"}) == std::vector<std::string>{"NOUN"});
}

TEST_CASE("empty token is unknown") {
  CHECK(CoarseTag({""}) == std::vector<PosTag>{PosTag::kX});
  CHECK(CoarseTag({}).empty());
}

TEST_CASE("tag names round trip") {
  for (int i = 0; i <= static_cast<int>(PosTag::kX); ++i) {
    PosTag tag = static_cast<PosTag>(i);
    PosTag parsed;
    REQUIRE(ParsePosTag(PosTagName(tag), &parsed));
    CHECK(parsed == tag);
  }
  PosTag unused;
  CHECK(!ParsePosTag("NN", &unused));
  CHECK(!ParsePosTag("noun", &unused));
}

TEST_CASE("pre-tagged lines split on the last underscore") {
  TaggedSentence t = ParseTaggedLine("The_DET dog_NOUN runs_VERB ._PUNCT");
  CHECK(t.tokens == Sentence({"The", "dog", "runs", "."}));
  REQUIRE(t.tags.size() == 4);
  CHECK(t.tags[0] == PosTag::kDet);
  CHECK(t.tags[3] == PosTag::kPunct);

  TaggedSentence u = ParseTaggedLine("a_b_NOUN");
  CHECK(u.tokens == Sentence({"a_b"}));
  CHECK(u.tags[0] == PosTag::kNoun);

  CHECK(ParseTaggedLine("").tokens.empty());

  CHECK_THROWS_AS(ParseTaggedLine("word"), DataError);
  CHECK_THROWS_AS(ParseTaggedLine("dog_NN"), DataError);
}

TEST_CASE("vocabulary size is case-sensitive") {
  CHECK(VocabSize(MakeCorpus({"a b a", "B a"})) == 3);
  CHECK(VocabSize(MakeCorpus({})) == 0);
  CHECK(VocabSize(MakeCorpus({""})) == 0);
}

TEST_CASE("tag n-gram variety counts distinct sequences") {
  std::vector<std::vector<PosTag>> tags = {
      {PosTag::kNoun, PosTag::kVerb},
      {PosTag::kNoun, PosTag::kVerb, PosTag::kNoun}};
  VarietyCounts v = PosNgramVariety(tags, 4);
  CHECK(v.per_n == std::map<int, int64_t>{{1, 2}, {2, 2}, {3, 1}, {4, 0}});
  CHECK(v.total == 5);

  VarietyCounts single = PosNgramVariety({{PosTag::kDet, PosTag::kNoun,
                                           PosTag::kVerb}}, 2);
  CHECK(single.per_n == std::map<int, int64_t>{{1, 3}, {2, 2}});
  CHECK(single.total == 5);
}

TEST_CASE("tag n-grams never cross sentences") {
  std::vector<std::vector<PosTag>> tags = {{PosTag::kNoun}, {PosTag::kVerb}};
  VarietyCounts v = PosNgramVariety(tags, 2);
  CHECK(v.per_n.at(1) == 2);
  CHECK(v.per_n.at(2) == 0);
}

TEST_CASE("variety grows monotonically with more text") {
  std::mt19937_64 gen(13);
  std::uniform_int_distribution<int> tag_dist(0, 11);
  std::uniform_int_distribution<int> len_dist(1, 9);
  std::vector<std::vector<PosTag>> tags;
  VarietyCounts prev;
  for (int step = 0; step < 40; ++step) {
    std::vector<PosTag> sent(static_cast<size_t>(len_dist(gen)));
    for (PosTag &t : sent) t = static_cast<PosTag>(tag_dist(gen));
    tags.push_back(sent);
    VarietyCounts now = PosNgramVariety(tags, 4);
    for (int n = 1; n <= 4; ++n) CHECK(now.per_n.at(n) >= prev.per_n[n]);
    CHECK(now.total >= prev.total);
    prev = now;
  }
}

TEST_CASE("ngram precision and recall, multiset mode") {
  Corpus ref = MakeCorpus({"a b c d e"});
  Corpus hyp = MakeCorpus({"a b c d x"});
  PrecisionRecall pr = NgramPrecisionRecall(hyp, ref, 4);
  CHECK(pr.precision == doctest::Approx(0.5));
  CHECK(pr.recall == doctest::Approx(0.5));

  PrecisionRecall id = NgramPrecisionRecall(ref, ref, 4);
  CHECK(id.precision == doctest::Approx(1.0));
  CHECK(id.recall == doctest::Approx(1.0));

  // Repeats clip against the reference count.
  PrecisionRecall clipped =
      NgramPrecisionRecall(MakeCorpus({"a a"}), MakeCorpus({"a"}), 1);
  CHECK(clipped.precision == doctest::Approx(0.5));
  CHECK(clipped.recall == doctest::Approx(1.0));

  // Matching is per line, not across lines.
  PrecisionRecall crossed =
      NgramPrecisionRecall(MakeCorpus({"a", "b"}), MakeCorpus({"b", "a"}), 1);
  CHECK(crossed.precision == doctest::Approx(0.0));
  CHECK(crossed.recall == doctest::Approx(0.0));
}

TEST_CASE("ngram precision and recall, distinct mode") {
  Corpus hyp = MakeCorpus({"a b", "b a"});
  Corpus ref = MakeCorpus({"a b", "a b"});
  PrecisionRecall pr = NgramPrecisionRecall(hyp, ref, 2, true);
  CHECK(pr.precision == doctest::Approx(0.5));
  CHECK(pr.recall == doctest::Approx(1.0));

  // Distinct mode pools the corpus, so line pairing stops mattering.
  PrecisionRecall crossed = NgramPrecisionRecall(
      MakeCorpus({"a", "b"}), MakeCorpus({"b", "a"}), 1, true);
  CHECK(crossed.precision == doctest::Approx(1.0));
  CHECK(crossed.recall == doctest::Approx(1.0));
}

TEST_CASE("ngram keys respect token boundaries") {
  // "ab"+"c" and "a"+"bc" must be different bigrams.
  PrecisionRecall pr =
      NgramPrecisionRecall(MakeCorpus({"ab c"}), MakeCorpus({"a bc"}), 2);
  CHECK(pr.precision == doctest::Approx(0.0));
}

TEST_CASE("ngram precision errors") {
  Corpus ok = MakeCorpus({"a b c"});
  CHECK_THROWS_AS(NgramPrecisionRecall(ok, MakeCorpus({"a", "b"}), 1),
                  DataError);
  // No 4-grams on the short side.
  CHECK_THROWS_AS(NgramPrecisionRecall(ok, ok, 4), DataError);
  CHECK_THROWS_AS(NgramPrecisionRecall(ok, ok, 4, true), DataError);
}
