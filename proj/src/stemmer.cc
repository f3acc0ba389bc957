// src/stemmer.cc

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

#include <cstring>

namespace btforge {

namespace {

struct Rule {
  const char *suffix;
  const char *replacement;
  size_t min_prefix;     // bytes required before the suffix
  bool not_after_s;      // blocks "-s" from eating "ss"
};

const Rule kRules[] = {
    {"sses", "ss", 2, false},
    {"ies", "i", 2, false},
    {"s", "", 3, true},
    {"ed", "", 3, false},
    {"ing", "", 3, false},
    {"ly", "", 3, false},
    {"est", "", 3, false},
    {"er", "", 3, false},
};

bool ApplyOnce(std::string *word) {
  for (const Rule &rule : kRules) {
    size_t slen = std::strlen(rule.suffix);
    if (word->size() < slen + rule.min_prefix) continue;
    if (word->compare(word->size() - slen, slen, rule.suffix) != 0) continue;
    if (rule.not_after_s && (*word)[word->size() - slen - 1] == 's') continue;
    word->replace(word->size() - slen, slen, rule.replacement);
    return true;
  }
  return false;
}

}  // namespace

std::string Stem(const std::string &word) {
  std::string out = word;
  // Every rule output is strictly shorter, so this terminates.
  while (ApplyOnce(&out)) {
  }
  return out;
}

}  // namespace btforge
