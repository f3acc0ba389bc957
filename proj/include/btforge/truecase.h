// include/btforge/truecase.h

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

#ifndef BTFORGE_TRUECASE_H_
#define BTFORGE_TRUECASE_H_

#include <map>
#include <string>

#include "btforge/types.h"

namespace btforge {

// Frequency truecaser.  For every lowercased form the model keeps the
// surface casing seen most often away from sentence starts, where
// casing is informative.  Ties prefer the lexicographically smallest
// surface form.
class TruecaseModel {
 public:
  struct Entry {
    std::string surface;
    int64_t count = 0;
  };

  void Learn(const Corpus &corpus);
  Sentence Apply(const Sentence &tokens) const;

  // One record per line: "surface<TAB>count", sorted by lowercased key
  // so identical training data serializes byte-identically.
  std::string Serialize() const;
  static TruecaseModel Parse(const std::string &content);

  void Save(const std::string &path) const;
  static TruecaseModel Load(const std::string &path);

  size_t size() const { return best_.size(); }
  const std::map<std::string, Entry> &entries() const { return best_; }

 private:
  std::map<std::string, Entry> best_;
};

}  // namespace btforge

#endif  // BTFORGE_TRUECASE_H_
