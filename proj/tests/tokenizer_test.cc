// tests/tokenizer_test.cc

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

#include "btforge/tokenizer.h"

#include <random>
#include <string>
#include <vector>

#include "btforge/text.h"
#include "doctest.h"

using namespace btforge;

TEST_CASE("basic tokenization") {
  CHECK(Tokenize("") == Sentence{});
  CHECK(Tokenize("hello") == Sentence{"hello"});
  CHECK(Tokenize("Hello, world!") == Sentence{"Hello", ",", "world", "!"});
}

TEST_CASE("edge punctuation detaches iteratively, in original order") {
  CHECK(Tokenize("((a))") == Sentence{"(", "(", "a", ")", ")"});
  CHECK(Tokenize("\"quoted\"") == Sentence{"\"", "quoted", "\""});
  CHECK(Tokenize("wait...") == Sentence{"wait", ".", ".", "."});
  CHECK(Tokenize("?!") == Sentence{"?", "!"});
}

TEST_CASE("interior punctuation is never split") {
  CHECK(Tokenize("U.S.") == Sentence{"U.S", "."});
  CHECK(Tokenize("a.b") == Sentence{"a.b"});
  CHECK(Tokenize("don't") == Sentence{"don't"});
  // Hyphens and apostrophes are not in the detachment set at all.
  CHECK(Tokenize("-x-") == Sentence{"-x-"});
}

TEST_CASE("whitespace of any kind separates chunks") {
  CHECK(Tokenize("a\tb\xC2\xA0" "c") == Sentence{"a", "b", "c"});
}

TEST_CASE("tokenization is idempotent under rejoining") {
  std::mt19937_64 gen(7);
  const std::string alphabet = "ab.,!?;:\"() \t";
  std::uniform_int_distribution<size_t> len_dist(0, 30);
  std::uniform_int_distribution<size_t> chr_dist(0, alphabet.size() - 1);
  for (int iter = 0; iter < 500; ++iter) {
    std::string line;
    size_t len = len_dist(gen);
    for (size_t i = 0; i < len; ++i) line.push_back(alphabet[chr_dist(gen)]);
    Sentence once = Tokenize(line);
    Sentence twice = Tokenize(JoinTokens(once));
    CHECK(once == twice);
  }
}
