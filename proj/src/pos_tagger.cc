// src/pos_tagger.cc

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

#include "btforge/pos_tagger.h"

#include <unordered_map>

#include "btforge/line_io.h"
#include "btforge/text.h"

namespace btforge {

const char *PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "NOUN";
    case PosTag::kVerb: return "VERB";
    case PosTag::kAdj: return "ADJ";
    case PosTag::kAdv: return "ADV";
    case PosTag::kPron: return "PRON";
    case PosTag::kDet: return "DET";
    case PosTag::kAdp: return "ADP";
    case PosTag::kNum: return "NUM";
    case PosTag::kConj: return "CONJ";
    case PosTag::kPrt: return "PRT";
    case PosTag::kPunct: return "PUNCT";
    case PosTag::kX: return "X";
  }
  return "X";
}

bool ParsePosTag(const std::string &name, PosTag *tag) {
  static const std::unordered_map<std::string, PosTag> kByName = {
      {"NOUN", PosTag::kNoun}, {"VERB", PosTag::kVerb},
      {"ADJ", PosTag::kAdj},   {"ADV", PosTag::kAdv},
      {"PRON", PosTag::kPron}, {"DET", PosTag::kDet},
      {"ADP", PosTag::kAdp},   {"NUM", PosTag::kNum},
      {"CONJ", PosTag::kConj}, {"PRT", PosTag::kPrt},
      {"PUNCT", PosTag::kPunct}, {"X", PosTag::kX}};
  auto it = kByName.find(name);
  if (it == kByName.end()) return false;
  *tag = it->second;
  return true;
}

namespace {

// Each word lives in exactly one class; lookup is on the lowercased
// surface form.
const std::unordered_map<std::string, PosTag> &ClosedClassLexicon() {
  static const std::unordered_map<std::string, PosTag> *kLexicon = [] {
    auto *m = new std::unordered_map<std::string, PosTag>;
    static const char *kDet[] = {
        "a", "an", "the", "this", "that", "these", "those", "each", "every",
        "either", "neither", "some", "any", "no", "all", "both", "few",
        "many", "much", "most", "several", "such"};
    static const char *kPron[] = {
        "i", "you", "he", "she", "it", "we", "they", "me", "him", "her",
        "us", "them", "mine", "yours", "hers", "ours", "theirs", "my",
        "your", "his", "its", "our", "their", "myself", "yourself",
        "himself", "herself", "itself", "ourselves", "yourselves",
        "themselves", "who", "whom", "whose", "which", "what", "someone",
        "anyone", "everyone", "nobody", "something", "anything",
        "everything", "nothing"};
    static const char *kAdp[] = {
        "in", "on", "at", "by", "for", "with", "about", "against",
        "between", "into", "through", "during", "before", "after", "above",
        "below", "to", "from", "up", "down", "under", "over", "of", "off",
        "near", "across", "behind", "beyond", "around", "among", "along",
        "upon", "within", "without", "toward", "towards", "since", "until",
        "till", "per", "via", "despite", "except"};
    static const char *kConj[] = {
        "and", "or", "but", "nor", "so", "yet", "although", "though",
        "because", "while", "whereas", "if", "unless", "than", "when",
        "whenever", "where", "wherever", "as", "once", "lest"};
    static const char *kPrt[] = {"not", "n't", "'s"};
    for (const char *w : kDet) (*m)[w] = PosTag::kDet;
    for (const char *w : kPron) (*m)[w] = PosTag::kPron;
    for (const char *w : kAdp) (*m)[w] = PosTag::kAdp;
    for (const char *w : kConj) (*m)[w] = PosTag::kConj;
    for (const char *w : kPrt) (*m)[w] = PosTag::kPrt;
    return m;
  }();
  return *kLexicon;
}

bool AllPunct(const std::string &token) {
  for (unsigned char c : token) {
    bool punct = (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
                 (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
    if (!punct) return false;
  }
  return !token.empty();
}

bool IsNumeral(const std::string &token) {
  bool has_digit = false;
  for (unsigned char c : token) {
    if (c >= '0' && c <= '9') {
      has_digit = true;
    } else if (c != '.' && c != ',' && c != '-' && c != '/' && c != '%') {
      return false;
    }
  }
  return has_digit;
}

bool HasSuffix(const std::string &s, const std::string &suffix) {
  // Strictly longer, so the bare suffix is not its own match.
  return s.size() > suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

PosTag TagOne(const std::string &token) {
  if (token.empty()) return PosTag::kX;
  const auto &lexicon = ClosedClassLexicon();
  auto it = lexicon.find(LowercaseCopy(token));
  if (it != lexicon.end()) return it->second;
  if (AllPunct(token)) return PosTag::kPunct;
  if (IsNumeral(token)) return PosTag::kNum;
  if (HasSuffix(token, "ly")) return PosTag::kAdv;
  if (HasSuffix(token, "ing") || HasSuffix(token, "ed")) return PosTag::kVerb;
  if (HasSuffix(token, "ous") || HasSuffix(token, "ful") ||
      HasSuffix(token, "ive"))
    return PosTag::kAdj;
  return PosTag::kNoun;
}

}  // namespace

std::vector<PosTag> CoarseTag(const Sentence &tokens) {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const Token &t : tokens) tags.push_back(TagOne(t));
  return tags;
}

TaggedSentence ParseTaggedLine(const std::string &line) {
  TaggedSentence out;
  for (const Token &item : SplitWhitespace(line)) {
    size_t sep = item.rfind('_');
    if (sep == std::string::npos)
      throw DataError("tagged token without underscore: \"" + item + "\"");
    PosTag tag;
    if (!ParsePosTag(item.substr(sep + 1), &tag))
      throw DataError("unknown tag in \"" + item + "\"");
    out.tokens.push_back(item.substr(0, sep));
    out.tags.push_back(tag);
  }
  return out;
}

}  // namespace btforge
