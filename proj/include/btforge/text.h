// include/btforge/text.h

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

#ifndef BTFORGE_TEXT_H_
#define BTFORGE_TEXT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace btforge {

// One decoded code point and the number of bytes it consumed.
// An invalid byte decodes as itself with length 1 so that slicing by
// length never loses input bytes.
struct CodePoint {
  uint32_t value;
  int length;
};

CodePoint DecodeUtf8(const char *s, size_t avail);
void AppendUtf8(uint32_t cp, std::string *out);
std::vector<uint32_t> DecodeString(const std::string &s);
std::string EncodeString(const std::vector<uint32_t> &cps);

bool IsSpaceCodePoint(uint32_t cp);

// Simple one-to-one lowercase mapping covering ASCII, Latin-1, Latin
// Extended-A, Greek and Cyrillic base blocks.  Everything else maps to
// itself.
uint32_t ToLowerCodePoint(uint32_t cp);
std::string LowercaseCopy(const std::string &s);

// Splits on runs of Unicode whitespace; never returns empty fields.
std::vector<std::string> SplitWhitespace(const std::string &line);

std::string JoinTokens(const std::vector<std::string> &tokens);

}  // namespace btforge

#endif  // BTFORGE_TEXT_H_
