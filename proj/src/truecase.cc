// src/truecase.cc

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

#include <cstdio>
#include <unordered_map>

#include "btforge/line_io.h"
#include "btforge/text.h"

namespace btforge {

void TruecaseModel::Learn(const Corpus &corpus) {
  // Full per-surface counts first; the model keeps only the winner.
  std::unordered_map<std::string, std::unordered_map<std::string, int64_t>>
      counts;
  for (const Sentence &sent : corpus) {
    for (size_t i = 1; i < sent.size(); ++i) {
      counts[LowercaseCopy(sent[i])][sent[i]] += 1;
    }
  }
  best_.clear();
  for (const auto &[key, surfaces] : counts) {
    Entry best;
    for (const auto &[surface, count] : surfaces) {
      if (count > best.count || (count == best.count && surface < best.surface))
        best = Entry{surface, count};
    }
    best_[key] = best;
  }
}

Sentence TruecaseModel::Apply(const Sentence &tokens) const {
  if (tokens.empty()) return tokens;
  Sentence out = tokens;
  std::string key = LowercaseCopy(tokens[0]);
  auto it = best_.find(key);
  out[0] = (it != best_.end()) ? it->second.surface : key;
  return out;
}

std::string TruecaseModel::Serialize() const {
  std::string out;
  for (const auto &[key, entry] : best_) {
    out += entry.surface;
    out.push_back('\t');
    out += std::to_string(entry.count);
    out.push_back('\n');
  }
  return out;
}

TruecaseModel TruecaseModel::Parse(const std::string &content) {
  TruecaseModel model;
  size_t start = 0;
  int lineno = 0;
  while (start < content.size()) {
    size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string line = content.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw DataError("truecase model line " + std::to_string(lineno) +
                      ": expected surface<TAB>count");
    std::string surface = line.substr(0, tab);
    int64_t count = 0;
    try {
      count = std::stoll(line.substr(tab + 1));
    } catch (const std::exception &) {
      throw DataError("truecase model line " + std::to_string(lineno) +
                      ": bad count");
    }
    std::string key = LowercaseCopy(surface);
    if (model.best_.count(key))
      throw DataError("truecase model line " + std::to_string(lineno) +
                      ": duplicate entry for " + key);
    model.best_[key] = Entry{surface, count};
  }
  return model;
}

void TruecaseModel::Save(const std::string &path) const {
  WriteStringAtomic(path, Serialize());
}

TruecaseModel TruecaseModel::Load(const std::string &path) {
  std::vector<std::string> lines = ReadLines(path);
  std::string content;
  for (const std::string &l : lines) {
    content += l;
    content.push_back('\n');
  }
  return Parse(content);
}

}  // namespace btforge
