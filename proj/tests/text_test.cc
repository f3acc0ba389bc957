// tests/text_test.cc

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

#include "btforge/text.h"

#include <string>
#include <vector>

#include "doctest.h"

using namespace btforge;

TEST_CASE("utf8 decoding handles all sequence lengths") {
  CodePoint cp = DecodeUtf8("a", 1);
  CHECK(cp.value == 0x61);
  CHECK(cp.length == 1);

  cp = DecodeUtf8("\xC3\xA9", 2);  // e with acute
  CHECK(cp.value == 0xE9);
  CHECK(cp.length == 2);

  cp = DecodeUtf8("\xE2\x82\xAC", 3);  // euro sign
  CHECK(cp.value == 0x20AC);
  CHECK(cp.length == 3);

  cp = DecodeUtf8("\xF0\x9F\x98\x80", 4);  // emoji
  CHECK(cp.value == 0x1F600);
  CHECK(cp.length == 4);
}

TEST_CASE("invalid bytes decode as themselves") {
  CodePoint cp = DecodeUtf8("\xFF", 1);
  CHECK(cp.value == 0xFF);
  CHECK(cp.length == 1);

  // Truncated two-byte sequence.
  cp = DecodeUtf8("\xC3", 1);
  CHECK(cp.value == 0xC3);
  CHECK(cp.length == 1);

  // Overlong encoding of '/'.
  cp = DecodeUtf8("\xC0\xAF", 2);
  CHECK(cp.value == 0xC0);
  CHECK(cp.length == 1);

  // Surrogate half.
  cp = DecodeUtf8("\xED\xA0\x80", 3);
  CHECK(cp.value == 0xED);
  CHECK(cp.length == 1);
}

TEST_CASE("encode decode round trip") {
  std::vector<uint32_t> cps = {0x61, 0xE9, 0x20AC, 0x1F600, 0x7F, 0x80};
  CHECK(DecodeString(EncodeString(cps)) == cps);

  std::string s = "caf\xC3\xA9 \xE2\x82\xAC 5";
  CHECK(EncodeString(DecodeString(s)) == s);
}

TEST_CASE("space classification covers unicode spaces") {
  CHECK(IsSpaceCodePoint(' '));
  CHECK(IsSpaceCodePoint('\t'));
  CHECK(IsSpaceCodePoint('\r'));
  CHECK(IsSpaceCodePoint(0xA0));    // no-break space
  CHECK(IsSpaceCodePoint(0x2003));  // em space
  CHECK(IsSpaceCodePoint(0x3000));  // ideographic space
  CHECK_FALSE(IsSpaceCodePoint('a'));
  CHECK_FALSE(IsSpaceCodePoint(0x200B));  // zero width space is not blank
}

TEST_CASE("lowercase mapping covers the supported blocks") {
  CHECK(ToLowerCodePoint('A') == 'a');
  CHECK(ToLowerCodePoint('Z') == 'z');
  CHECK(ToLowerCodePoint('a') == 'a');
  CHECK(ToLowerCodePoint(0xC0) == 0xE0);   // A grave
  CHECK(ToLowerCodePoint(0xD7) == 0xD7);   // multiplication sign unchanged
  CHECK(ToLowerCodePoint(0xDE) == 0xFE);   // thorn
  CHECK(ToLowerCodePoint(0x100) == 0x101); // A macron
  CHECK(ToLowerCodePoint(0x130) == 0x69);  // dotted capital I
  CHECK(ToLowerCodePoint(0x178) == 0xFF);  // Y diaeresis
  CHECK(ToLowerCodePoint(0x139) == 0x13A); // L acute
  CHECK(ToLowerCodePoint(0x391) == 0x3B1); // Alpha
  CHECK(ToLowerCodePoint(0x3A9) == 0x3C9); // Omega
  CHECK(ToLowerCodePoint(0x410) == 0x430); // Cyrillic A
  CHECK(ToLowerCodePoint(0x42F) == 0x44F); // Cyrillic Ya
  CHECK(ToLowerCodePoint(0x400) == 0x450); // Ie with grave
  CHECK(ToLowerCodePoint(0x4FF) == 0x4FF); // outside mapped range
}

TEST_CASE("lowercase copy works on mixed text") {
  CHECK(LowercaseCopy("HeLLo") == "hello");
  CHECK(LowercaseCopy("\xC3\x89T\xC3\x89") == "\xC3\xA9t\xC3\xA9");
  CHECK(LowercaseCopy("") == "");
}

TEST_CASE("whitespace splitting never returns empty fields") {
  CHECK(SplitWhitespace("") == std::vector<std::string>{});
  CHECK(SplitWhitespace("   \t ") == std::vector<std::string>{});
  CHECK(SplitWhitespace("a") == std::vector<std::string>{"a"});
  CHECK(SplitWhitespace("  a\tb  c ") ==
        std::vector<std::string>{"a", "b", "c"});
  // No-break space separates tokens too.
  CHECK(SplitWhitespace("a\xC2\xA0ptr") == std::vector<std::string>{"a", "ptr"});
}

TEST_CASE("join is the inverse of split on clean input") {
  std::vector<std::string> tokens = {"a", "bc", "d"};
  CHECK(JoinTokens(tokens) == "a bc d");
  CHECK(SplitWhitespace(JoinTokens(tokens)) == tokens);
  CHECK(JoinTokens({}) == "");
}
