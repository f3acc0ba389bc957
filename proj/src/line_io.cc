// src/line_io.cc

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

#include "btforge/line_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace btforge {

std::vector<std::string> ReadLines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  std::vector<std::string> lines;
  size_t start = 0;
  for (size_t i = 0; i < content.size(); ++i) {
    if (content[i] == '\n') {
      lines.emplace_back(content, start, i - start);
      start = i + 1;
    }
  }
  if (start < content.size()) lines.emplace_back(content, start);
  return lines;
}

void WriteStringAtomic(const std::string &path, const std::string &content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open output file: " + tmp);
    out.write(content.data(), content.size());
    out.flush();
    if (!out) throw DataError("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw DataError("rename failed: " + path);
  }
}

void WriteLinesAtomic(const std::string &path,
                      const std::vector<std::string> &lines) {
  std::string content;
  size_t total = 0;
  for (const std::string &l : lines) total += l.size() + 1;
  content.reserve(total);
  for (const std::string &l : lines) {
    content += l;
    content.push_back('\n');
  }
  WriteStringAtomic(path, content);
}

}  // namespace btforge
