// include/btforge/report.h

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

#ifndef BTFORGE_REPORT_H_
#define BTFORGE_REPORT_H_

#include <map>
#include <string>
#include <vector>

namespace btforge {

struct ReportRow {
  std::string label;
  std::map<std::string, double> values;  // metric or error-class name
};

std::string FormatFixed(double value, int decimals);

// Score grid as TSV.  Columns are fixed: system label, then BLEU, TER,
// METEOR, CHRF1 (2 decimals, direction arrow in the header), then the
// five error-class rates (1 decimal).  Only columns present in the rows
// are emitted; all rows must carry the same set.  With no rows every
// column appears.
std::string RenderComparison(const std::vector<ReportRow> &rows);

// Pads TSV cells with spaces into aligned columns for terminals.
std::string AlignTsv(const std::string &tsv);

}  // namespace btforge

#endif  // BTFORGE_REPORT_H_
