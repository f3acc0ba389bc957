// src/report.cc

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

#include "btforge/report.h"

#include <algorithm>
#include <cstdio>

#include "btforge/line_io.h"
#include "btforge/text.h"

namespace btforge {

namespace {

struct Column {
  const char *name;
  const char *arrow;  // higher-is-better or lower-is-better marker
  int decimals;
};

// Table layout of the score grids: quality metrics first, error-class
// rates after, each with the direction a better system moves in.
const Column kColumns[] = {
    {"BLEU", "↑", 2},   {"TER", "↓", 2},
    {"METEOR", "↑", 2}, {"CHRF1", "↑", 2},
    {"morph", "↓", 1},  {"order", "↓", 1},
    {"omission", "↓", 1}, {"addition", "↓", 1},
    {"mistranslation", "↓", 1},
};

}  // namespace

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string RenderComparison(const std::vector<ReportRow> &rows) {
  for (const ReportRow &row : rows) {
    if (row.values.size() != rows.front().values.size())
      throw DataError("rows carry different metric sets");
    for (const auto &[name, value] : row.values) {
      (void)value;
      if (!rows.front().values.count(name))
        throw DataError("rows carry different metric sets");
    }
  }
  std::vector<Column> active;
  size_t known = 0;
  for (const Column &col : kColumns) {
    if (rows.empty() || rows.front().values.count(col.name)) {
      active.push_back(col);
      if (!rows.empty()) ++known;
    }
  }
  if (!rows.empty() && known != rows.front().values.size())
    throw DataError("rows carry a metric outside the report layout");

  std::string out = "system";
  for (const Column &col : active) {
    out += '\t';
    out += col.name;
    out += col.arrow;
  }
  out += '\n';
  for (const ReportRow &row : rows) {
    out += row.label;
    for (const Column &col : active) {
      out += '\t';
      out += FormatFixed(row.values.at(col.name), col.decimals);
    }
    out += '\n';
  }
  return out;
}

std::string AlignTsv(const std::string &tsv) {
  std::vector<std::vector<std::string>> grid;
  std::vector<size_t> widths;
  size_t pos = 0;
  while (pos < tsv.size()) {
    size_t eol = tsv.find('\n', pos);
    if (eol == std::string::npos) eol = tsv.size();
    std::vector<std::string> cells;
    size_t cell_start = pos;
    for (size_t i = pos; i <= eol; ++i) {
      if (i == eol || tsv[i] == '\t') {
        cells.push_back(tsv.substr(cell_start, i - cell_start));
        cell_start = i + 1;
      }
    }
    for (size_t c = 0; c < cells.size(); ++c) {
      // Display width, not byte count; the arrows are multi-byte.
      size_t w = DecodeString(cells[c]).size();
      if (c >= widths.size()) widths.push_back(w);
      else widths[c] = std::max(widths[c], w);
    }
    grid.push_back(std::move(cells));
    pos = eol + 1;
  }
  std::string out;
  for (const auto &cells : grid) {
    for (size_t c = 0; c < cells.size(); ++c) {
      out += cells[c];
      if (c + 1 < cells.size()) {
        size_t w = DecodeString(cells[c]).size();
        out.append(widths[c] - w + 2, ' ');
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace btforge
