// src/corpus.cc

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

#include "btforge/corpus.h"

#include "btforge/line_io.h"

namespace btforge {

ParallelCorpus ReadPaired(const std::string &src_path,
                          const std::string &tgt_path,
                          const std::string &label) {
  ParallelCorpus c;
  c.source = ReadLines(src_path);
  c.target = ReadLines(tgt_path);
  if (c.source.size() != c.target.size())
    throw DataError("line count mismatch: " + src_path + " has " +
                    std::to_string(c.source.size()) + " lines, " + tgt_path +
                    " has " + std::to_string(c.target.size()));
  c.provenance.assign(c.source.size(), label);
  return c;
}

ParallelCorpus ReadTsv(const std::string &path) {
  ParallelCorpus c;
  std::vector<std::string> lines = ReadLines(path);
  c.source.reserve(lines.size());
  c.target.reserve(lines.size());
  c.provenance.reserve(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string &line = lines[i];
    size_t t1 = line.find('\t');
    if (t1 == std::string::npos)
      throw DataError(path + " line " + std::to_string(i + 1) +
                      ": expected source<TAB>target[<TAB>provenance]");
    size_t t2 = line.find('\t', t1 + 1);
    std::string prov;
    std::string target;
    if (t2 == std::string::npos) {
      target = line.substr(t1 + 1);
    } else {
      if (line.find('\t', t2 + 1) != std::string::npos)
        throw DataError(path + " line " + std::to_string(i + 1) +
                        ": too many fields");
      target = line.substr(t1 + 1, t2 - t1 - 1);
      prov = line.substr(t2 + 1);
    }
    c.source.push_back(line.substr(0, t1));
    c.target.push_back(std::move(target));
    c.provenance.push_back(std::move(prov));
  }
  return c;
}

void WriteTsvAtomic(const std::string &path, const ParallelCorpus &c) {
  std::vector<std::string> lines;
  lines.reserve(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    std::string line = c.source[i];
    line.push_back('\t');
    line += c.target[i];
    line.push_back('\t');
    line += c.provenance[i];
    lines.push_back(std::move(line));
  }
  WriteLinesAtomic(path, lines);
}

void WritePairedAtomic(const std::string &src_path,
                       const std::string &tgt_path, const ParallelCorpus &c) {
  WriteLinesAtomic(src_path, c.source);
  WriteLinesAtomic(tgt_path, c.target);
}

}  // namespace btforge
