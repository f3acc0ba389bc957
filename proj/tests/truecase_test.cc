// tests/truecase_test.cc

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

#include "btforge/truecase.h"

#include "btforge/line_io.h"
#include "doctest.h"
#include "test_util.h"

using namespace btforge;

TEST_CASE("learning counts only non-initial positions") {
  TruecaseModel model;
  model.Learn({{"He", "saw", "iPhone"}, {"iPhone", "broke"}});
  // "He" and the second line's "iPhone" are sentence-initial; only the
  // first line's "iPhone" plus "saw" and "broke" count.
  CHECK(model.size() == 3);
  REQUIRE(model.entries().count("iphone") == 1);
  CHECK(model.entries().at("iphone").surface == "iPhone");
  CHECK(model.entries().at("iphone").count == 1);
  CHECK(model.entries().count("he") == 0);

  TruecaseModel only_initial;
  only_initial.Learn({{"He", "said"}, {"he", "said"}});
  CHECK(only_initial.entries().count("he") == 0);
  CHECK(only_initial.entries().at("said").surface == "said");

  TruecaseModel empty;
  empty.Learn({});
  CHECK(empty.size() == 0);
}

TEST_CASE("count ties break to the smallest surface form") {
  TruecaseModel model;
  model.Learn({{"x", "AB"}, {"x", "Ab"}});
  CHECK(model.entries().at("ab").surface == "AB");
}

TEST_CASE("application rewrites only the first token") {
  TruecaseModel model;
  model.Learn({{"x", "iPhone"}});
  CHECK(model.Apply({"IPhone", "broke"}) == Sentence{"iPhone", "broke"});
  CHECK(model.Apply({"IPHONE", "IPHONE"}) == Sentence{"iPhone", "IPHONE"});

  TruecaseModel empty;
  CHECK(empty.Apply({"Hello", "world"}) == Sentence{"hello", "world"});
  CHECK(empty.Apply({}) == Sentence{});
}

TEST_CASE("model serialization round trips and sorts records") {
  TruecaseModel model;
  model.Learn({{"x", "Zebra", "apple", "Zebra"}});
  std::string text = model.Serialize();
  CHECK(text == "apple\t1\nZebra\t2\n");
  TruecaseModel back = TruecaseModel::Parse(text);
  CHECK(back.Serialize() == text);
}

TEST_CASE("malformed model files are rejected") {
  CHECK_THROWS_AS(TruecaseModel::Parse("no-tabs-here\n"), DataError);
  CHECK_THROWS_AS(TruecaseModel::Parse("a\tnot-a-number\n"), DataError);
  CHECK_THROWS_AS(TruecaseModel::Parse("a\t1\nA\t2\n"), DataError);
}

TEST_CASE("learning is deterministic") {
  Corpus corpus = btforge_test::MakeCorpus(
      {"The Bank closed", "the bank closed", "banks Close the bank"});
  TruecaseModel a, b;
  a.Learn(corpus);
  b.Learn(corpus);
  CHECK(a.Serialize() == b.Serialize());
}
