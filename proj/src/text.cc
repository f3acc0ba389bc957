// src/text.cc

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

namespace btforge {

CodePoint DecodeUtf8(const char *s, size_t avail) {
  const unsigned char *u = reinterpret_cast<const unsigned char *>(s);
  unsigned char b0 = u[0];
  if (b0 < 0x80) return {b0, 1};
  int len;
  uint32_t cp;
  if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
  else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
  else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
  else return {b0, 1};
  if (static_cast<size_t>(len) > avail) return {b0, 1};
  for (int i = 1; i < len; ++i) {
    if ((u[i] & 0xC0) != 0x80) return {b0, 1};
    cp = (cp << 6) | (u[i] & 0x3F);
  }
  // Reject overlong forms and surrogates, again as raw bytes.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
      cp > 0x10FFFF)
    return {b0, 1};
  return {cp, len};
}

void AppendUtf8(uint32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::vector<uint32_t> DecodeString(const std::string &s) {
  std::vector<uint32_t> cps;
  cps.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    CodePoint cp = DecodeUtf8(s.data() + i, s.size() - i);
    cps.push_back(cp.value);
    i += cp.length;
  }
  return cps;
}

std::string EncodeString(const std::vector<uint32_t> &cps) {
  std::string out;
  out.reserve(cps.size());
  for (uint32_t cp : cps) AppendUtf8(cp, &out);
  return out;
}

bool IsSpaceCodePoint(uint32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

uint32_t ToLowerCodePoint(uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0xC0) return cp;
  // Latin-1 Supplement, excluding the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A comes in three alternation runs plus two oddballs.
  if (cp == 0x130) return 0x69;   // dotted capital I
  if (cp == 0x178) return 0xFF;   // capital Y with diaeresis
  if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if ((cp >= 0x139 && cp <= 0x147) || (cp >= 0x179 && cp <= 0x17D)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  // Greek.
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  // Cyrillic.
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

std::string LowercaseCopy(const std::string &s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    CodePoint cp = DecodeUtf8(s.data() + i, s.size() - i);
    AppendUtf8(ToLowerCodePoint(cp.value), &out);
    i += cp.length;
  }
  return out;
}

std::vector<std::string> SplitWhitespace(const std::string &line) {
  std::vector<std::string> fields;
  size_t i = 0;
  size_t start = 0;
  bool in_field = false;
  while (i < line.size()) {
    CodePoint cp = DecodeUtf8(line.data() + i, line.size() - i);
    if (IsSpaceCodePoint(cp.value)) {
      if (in_field) {
        fields.push_back(line.substr(start, i - start));
        in_field = false;
      }
    } else if (!in_field) {
      start = i;
      in_field = true;
    }
    i += cp.length;
  }
  if (in_field) fields.push_back(line.substr(start));
  return fields;
}

std::string JoinTokens(const std::vector<std::string> &tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace btforge
