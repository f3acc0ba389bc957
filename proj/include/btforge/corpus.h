// include/btforge/corpus.h

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

#ifndef BTFORGE_CORPUS_H_
#define BTFORGE_CORPUS_H_

#include <string>
#include <vector>

namespace btforge {

// A sentence-aligned bitext held as raw lines plus a per-line
// provenance label.  Lines are tokenized lazily where an operation
// needs token identity.
struct ParallelCorpus {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<std::string> provenance;

  size_t size() const { return source.size(); }
};

// Paired one-sentence-per-line files; label is applied to every line.
// The files must have the same number of lines.
ParallelCorpus ReadPaired(const std::string &src_path,
                          const std::string &tgt_path,
                          const std::string &label);

// TSV lines "source<TAB>target<TAB>provenance"; the provenance field
// may be omitted.
ParallelCorpus ReadTsv(const std::string &path);

void WriteTsvAtomic(const std::string &path, const ParallelCorpus &c);
void WritePairedAtomic(const std::string &src_path,
                       const std::string &tgt_path, const ParallelCorpus &c);

}  // namespace btforge

#endif  // BTFORGE_CORPUS_H_
