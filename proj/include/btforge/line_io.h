// include/btforge/line_io.h

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

#ifndef BTFORGE_LINE_IO_H_
#define BTFORGE_LINE_IO_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace btforge {

// Malformed or inconsistent input data.  The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &what) : std::runtime_error(what) {}
};

// Reads a whole file as LF-separated lines.  A trailing newline does not
// produce an extra empty line.  CR before LF is kept; downstream
// tokenization treats it as whitespace.
std::vector<std::string> ReadLines(const std::string &path);

// Writes lines LF-terminated to a temporary file in the same directory,
// then renames it over the target so readers never observe a partial file.
void WriteLinesAtomic(const std::string &path,
                      const std::vector<std::string> &lines);

void WriteStringAtomic(const std::string &path, const std::string &content);

}  // namespace btforge

#endif  // BTFORGE_LINE_IO_H_
