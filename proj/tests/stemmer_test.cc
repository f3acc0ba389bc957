// tests/stemmer_test.cc

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

#include "btforge/stemmer.h"

#include <random>
#include <string>

#include "doctest.h"

using namespace btforge;

TEST_CASE("plural and inflection suffixes") {
  CHECK(Stem("cat") == "cat");
  CHECK(Stem("cats") == "cat");
  CHECK(Stem("houses") == "house");
  CHECK(Stem("classes") == "class");
  CHECK(Stem("flies") == "fli");
  CHECK(Stem("walked") == "walk");
  CHECK(Stem("walking") == "walk");
  CHECK(Stem("running") == "runn");
  CHECK(Stem("quickly") == "quick");
  CHECK(Stem("biggest") == "bigg");
}

TEST_CASE("inflected forms of one lemma share a stem") {
  CHECK(Stem("sleeps") == Stem("sleeping"));
  CHECK(Stem("walked") == Stem("walks"));
  CHECK(Stem("cats") == Stem("cat"));
}

TEST_CASE("short words are left alone") {
  CHECK(Stem("") == "");
  CHECK(Stem("a") == "a");
  CHECK(Stem("ss") == "ss");
  CHECK(Stem("gas") == "gas");
  CHECK(Stem("ed") == "ed");
  CHECK(Stem("best") == "best");
  CHECK(Stem("is") == "is");
}

TEST_CASE("trailing ss survives the plural rule") {
  CHECK(Stem("glass") == "glass");
  CHECK(Stem("boss") == "boss");
}

TEST_CASE("rules cascade to a fixpoint") {
  // est then er both strip, one pass each.
  CHECK(Stem("interest") == "int");
  // ies blocked by its prefix floor, plain s fires instead.
  CHECK(Stem("ties") == "tie");
}

TEST_CASE("stemming is idempotent") {
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> len_dist(0, 12);
  std::uniform_int_distribution<int> char_dist(0, 25);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string word;
    int len = len_dist(gen);
    for (int i = 0; i < len; ++i)
      word.push_back(static_cast<char>('a' + char_dist(gen)));
    std::string once = Stem(word);
    CHECK(Stem(once) == once);
    CHECK(once.size() <= word.size());
  }
}
