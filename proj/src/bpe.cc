// src/bpe.cc

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

#include "btforge/bpe.h"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <unordered_set>

#include "btforge/line_io.h"
#include "btforge/text.h"

namespace btforge {

namespace {

const char kHeader[] = "#btforge-bpe v1";

// Code-point symbols for one word, end-of-word sentinel attached to the
// final one.
std::vector<std::string> DecomposeWord(const std::string &word) {
  std::vector<std::string> syms;
  size_t i = 0;
  while (i < word.size()) {
    CodePoint cp = DecodeUtf8(word.data() + i, word.size() - i);
    syms.push_back(word.substr(i, cp.length));
    i += cp.length;
  }
  if (syms.empty()) syms.push_back("");
  syms.back() += BpeModel::kEow;
  return syms;
}

struct LearnState {
  std::vector<std::string> symtab;
  std::unordered_map<std::string, uint32_t> symids;

  struct Word {
    std::vector<uint32_t> syms;
    int64_t freq;
  };
  std::vector<Word> words;

  std::unordered_map<uint64_t, int64_t> pair_count;
  std::unordered_map<uint64_t, std::vector<uint32_t>> pair_words;

  uint32_t Intern(const std::string &s) {
    auto it = symids.find(s);
    if (it != symids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(symtab.size());
    symtab.push_back(s);
    symids.emplace(s, id);
    return id;
  }

  static uint64_t Key(uint32_t l, uint32_t r) {
    return (static_cast<uint64_t>(l) << 32) | r;
  }
};

struct HeapEntry {
  int64_t count;
  uint32_t l, r;
};

}  // namespace

BpeModel LearnBpe(const Corpus &corpus_a, const Corpus &corpus_b,
                  size_t num_merges) {
  LearnState st;

  std::unordered_map<std::string, int64_t> word_freq;
  for (const Corpus *c : {&corpus_a, &corpus_b}) {
    for (const Sentence &sent : *c) {
      for (const Token &tok : sent) word_freq[tok] += 1;
    }
  }
  st.words.reserve(word_freq.size());
  for (const auto &[word, freq] : word_freq) {
    LearnState::Word w;
    for (const std::string &sym : DecomposeWord(word))
      w.syms.push_back(st.Intern(sym));
    w.freq = freq;
    st.words.push_back(std::move(w));
  }

  // Frequency ties pick the lexicographically smallest (left, right),
  // compared on symbol text.
  auto heap_less = [&st](const HeapEntry &a, const HeapEntry &b) {
    if (a.count != b.count) return a.count < b.count;
    if (st.symtab[a.l] != st.symtab[b.l]) return st.symtab[a.l] > st.symtab[b.l];
    return st.symtab[a.r] > st.symtab[b.r];
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(heap_less)>
      heap(heap_less);

  for (uint32_t wi = 0; wi < st.words.size(); ++wi) {
    const LearnState::Word &w = st.words[wi];
    for (size_t i = 0; i + 1 < w.syms.size(); ++i) {
      uint64_t key = LearnState::Key(w.syms[i], w.syms[i + 1]);
      st.pair_count[key] += w.freq;
      st.pair_words[key].push_back(wi);
    }
  }
  for (const auto &[key, count] : st.pair_count) {
    heap.push(HeapEntry{count, static_cast<uint32_t>(key >> 32),
                        static_cast<uint32_t>(key & 0xFFFFFFFFu)});
  }

  BpeModel model;
  // Guards against re-merging a pair whose symbol string was recreated
  // through a different split; the merge list must stay duplicate-free.
  std::unordered_set<uint64_t> merged_pairs;

  while (model.merges.size() < num_merges) {
    HeapEntry top{0, 0, 0};
    bool found = false;
    while (!heap.empty()) {
      top = heap.top();
      uint64_t key = LearnState::Key(top.l, top.r);
      auto it = st.pair_count.find(key);
      if (it == st.pair_count.end() || it->second <= 0 ||
          it->second != top.count || merged_pairs.count(key)) {
        heap.pop();
        continue;
      }
      found = true;
      break;
    }
    if (!found || top.count < 2) break;
    heap.pop();

    uint64_t best_key = LearnState::Key(top.l, top.r);
    merged_pairs.insert(best_key);
    uint32_t merged = st.Intern(st.symtab[top.l] + st.symtab[top.r]);
    model.merges.emplace_back(st.symtab[top.l], st.symtab[top.r]);

    std::vector<uint32_t> affected;
    affected.swap(st.pair_words[best_key]);
    st.pair_words.erase(best_key);
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()),
                   affected.end());

    std::set<uint64_t> touched;
    for (uint32_t wi : affected) {
      LearnState::Word &w = st.words[wi];
      // Delta of the word's whole pair multiset is simpler than patching
      // around each occurrence and immune to overlap corner cases.
      std::unordered_map<uint64_t, int64_t> delta;
      for (size_t i = 0; i + 1 < w.syms.size(); ++i)
        delta[LearnState::Key(w.syms[i], w.syms[i + 1])] -= 1;

      std::vector<uint32_t> out;
      out.reserve(w.syms.size());
      size_t i = 0;
      bool changed = false;
      while (i < w.syms.size()) {
        if (i + 1 < w.syms.size() && w.syms[i] == top.l &&
            w.syms[i + 1] == top.r) {
          out.push_back(merged);
          i += 2;
          changed = true;
        } else {
          out.push_back(w.syms[i]);
          i += 1;
        }
      }
      if (!changed) continue;  // stale index entry
      w.syms.swap(out);
      for (size_t j = 0; j + 1 < w.syms.size(); ++j)
        delta[LearnState::Key(w.syms[j], w.syms[j + 1])] += 1;

      for (const auto &[key, d] : delta) {
        if (d == 0) continue;
        int64_t &count = st.pair_count[key];
        count += d * w.freq;
        touched.insert(key);
        if (d > 0) st.pair_words[key].push_back(wi);
      }
    }
    for (uint64_t key : touched) {
      auto it = st.pair_count.find(key);
      if (it == st.pair_count.end()) continue;
      if (it->second <= 0) {
        st.pair_count.erase(it);
        st.pair_words.erase(key);
        continue;
      }
      heap.push(HeapEntry{it->second, static_cast<uint32_t>(key >> 32),
                          static_cast<uint32_t>(key & 0xFFFFFFFFu)});
    }
  }
  return model;
}

std::string BpeModel::Serialize() const {
  std::string out = kHeader;
  out.push_back('\n');
  for (const auto &[l, r] : merges) {
    out += l;
    out.push_back(' ');
    out += r;
    out.push_back('\n');
  }
  return out;
}

BpeModel BpeModel::Parse(const std::string &content) {
  BpeModel model;
  size_t start = 0;
  int lineno = 0;
  bool saw_header = false;
  while (start < content.size()) {
    size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string line = content.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (lineno == 1) {
      if (line != kHeader)
        throw DataError("bpe model: bad header line: " + line);
      saw_header = true;
      continue;
    }
    if (line.empty()) continue;
    size_t sp = line.find(' ');
    if (sp == std::string::npos || sp == 0 || sp + 1 >= line.size() ||
        line.find(' ', sp + 1) != std::string::npos)
      throw DataError("bpe model line " + std::to_string(lineno) +
                      ": expected left<SPACE>right");
    model.merges.emplace_back(line.substr(0, sp), line.substr(sp + 1));
  }
  if (!saw_header) throw DataError("bpe model: empty file");
  return model;
}

void BpeModel::Save(const std::string &path) const {
  WriteStringAtomic(path, Serialize());
}

BpeModel BpeModel::Load(const std::string &path) {
  std::vector<std::string> lines = ReadLines(path);
  std::string content;
  for (const std::string &l : lines) {
    content += l;
    content.push_back('\n');
  }
  return Parse(content);
}

BpeEncoder::BpeEncoder(const BpeModel &model) : model_(model) {
  for (size_t i = 0; i < model.merges.size(); ++i) {
    const auto &[l, r] = model.merges[i];
    // First occurrence wins if a file ever repeats a pair.
    ranks_.emplace(l + " " + r, i);
  }
}

// Iteratively merging the lowest-ranked adjacent pair reproduces the
// result of replaying the merge list in order; later merges never
// create an adjacency for an earlier rule that replay would have seen.
std::vector<std::string> BpeEncoder::Segment(const Token &token) const {
  std::vector<std::string> syms = DecomposeWord(token);
  if (syms.size() < 2 || ranks_.empty()) return syms;
  for (;;) {
    size_t best_rank = ranks_.size();
    for (size_t i = 0; i + 1 < syms.size(); ++i) {
      auto it = ranks_.find(syms[i] + " " + syms[i + 1]);
      if (it != ranks_.end() && it->second < best_rank) best_rank = it->second;
    }
    if (best_rank == ranks_.size()) break;
    const std::string &l = model_.merges[best_rank].first;
    const std::string &r = model_.merges[best_rank].second;
    std::vector<std::string> out;
    out.reserve(syms.size());
    size_t i = 0;
    while (i < syms.size()) {
      if (i + 1 < syms.size() && syms[i] == l && syms[i + 1] == r) {
        out.push_back(l + r);
        i += 2;
      } else {
        out.push_back(syms[i]);
        i += 1;
      }
    }
    syms.swap(out);
    if (syms.size() < 2) break;
  }
  return syms;
}

std::vector<Token> BpeEncoder::EncodeToken(const Token &token) {
  auto it = cache_.find(token);
  if (it != cache_.end()) return it->second;
  std::vector<std::string> syms = Segment(token);
  std::vector<Token> pieces;
  pieces.reserve(syms.size());
  const size_t eow_len = std::string(BpeModel::kEow).size();
  for (size_t i = 0; i < syms.size(); ++i) {
    if (i + 1 == syms.size()) {
      // The sentinel always rides on the final symbol.
      pieces.push_back(syms[i].substr(0, syms[i].size() - eow_len));
    } else {
      pieces.push_back(syms[i] + model_.continuation);
    }
  }
  cache_.emplace(token, pieces);
  return pieces;
}

Sentence BpeEncoder::EncodeSentence(const Sentence &tokens) {
  Sentence out;
  for (const Token &tok : tokens) {
    for (Token &piece : EncodeToken(tok)) out.push_back(std::move(piece));
  }
  return out;
}

Sentence ApplyBpe(const BpeModel &model, const Sentence &tokens) {
  BpeEncoder enc(model);
  return enc.EncodeSentence(tokens);
}

Sentence UndoBpe(const Sentence &pieces, const std::string &continuation) {
  Sentence out;
  std::string pending;
  bool open = false;
  for (const Token &piece : pieces) {
    bool cont = piece.size() >= continuation.size() &&
                piece.compare(piece.size() - continuation.size(),
                              continuation.size(), continuation) == 0;
    if (cont) {
      pending += piece.substr(0, piece.size() - continuation.size());
      open = true;
    } else {
      pending += piece;
      out.push_back(pending);
      pending.clear();
      open = false;
    }
  }
  if (open)
    throw DataError("dangling continuation marker at end of sentence");
  return out;
}

}  // namespace btforge
