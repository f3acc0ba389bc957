// src/tokenizer.cc

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

#include "btforge/text.h"

namespace btforge {

namespace {

bool IsDetachable(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case '"': case '(': case ')':
      return true;
    default:
      return false;
  }
}

// A detachable character is a single ASCII byte, so byte tests at the
// chunk edges are safe inside UTF-8.
void SplitChunk(const std::string &chunk, Sentence *out) {
  size_t lo = 0, hi = chunk.size();
  size_t lead_end = lo;
  while (lead_end < hi && IsDetachable(chunk[lead_end])) ++lead_end;
  size_t trail_begin = hi;
  while (trail_begin > lead_end && IsDetachable(chunk[trail_begin - 1]))
    --trail_begin;
  for (size_t i = lo; i < lead_end; ++i) out->push_back(std::string(1, chunk[i]));
  if (lead_end < trail_begin)
    out->push_back(chunk.substr(lead_end, trail_begin - lead_end));
  for (size_t i = trail_begin; i < hi; ++i)
    out->push_back(std::string(1, chunk[i]));
}

}  // namespace

Sentence Tokenize(const std::string &line) {
  Sentence tokens;
  for (const std::string &chunk : SplitWhitespace(line)) {
    SplitChunk(chunk, &tokens);
  }
  return tokens;
}

}  // namespace btforge
