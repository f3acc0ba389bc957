// tests/report_test.cc

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

#include <string>

#include "btforge/line_io.h"
#include "doctest.h"

using namespace btforge;

TEST_CASE("fixed formatting") {
  CHECK(FormatFixed(57.893, 2) == "57.89");
  CHECK(FormatFixed(57.897, 2) == "57.90");
  CHECK(FormatFixed(0.0, 2) == "0.00");
  CHECK(FormatFixed(100.0, 2) == "100.00");
  CHECK(FormatFixed(12.34, 1) == "12.3");
  CHECK(FormatFixed(12.35, 0) == "12");
  CHECK(FormatFixed(-3.456, 2) == "-3.46");
}

TEST_CASE("empty comparison prints every column") {
  CHECK(RenderComparison({}) ==
        "system\tBLEU↑\tTER↓\tMETEOR↑\tCHRF1↑\tmorph↓\torder↓\t"
        "omission↓\taddition↓\tmistranslation↓\n");
}

TEST_CASE("rows render in fixed column order") {
  ReportRow a{"baseline",
              {{"BLEU", 27.5},
               {"TER", 55.137},
               {"METEOR", 31.0},
               {"CHRF1", 54.321}}};
  ReportRow b{"mixed",
              {{"BLEU", 28.25},
               {"TER", 54.0},
               {"METEOR", 32.5},
               {"CHRF1", 55.0}}};
  std::string out = RenderComparison({a, b});
  CHECK(out ==
        "system\tBLEU↑\tTER↓\tMETEOR↑\tCHRF1↑\n"
        "baseline\t27.50\t55.14\t31.00\t54.32\n"
        "mixed\t28.25\t54.00\t32.50\t55.00\n");
}

TEST_CASE("error-class columns use one decimal") {
  ReportRow a{"sys",
              {{"morph", 2.25},
               {"order", 3.0},
               {"omission", 4.56},
               {"addition", 0.0},
               {"mistranslation", 11.11}}};
  CHECK(RenderComparison({a}) ==
        "system\tmorph↓\torder↓\tomission↓\taddition↓\tmistranslation↓\n"
        "sys\t2.2\t3.0\t4.6\t0.0\t11.1\n");
}

TEST_CASE("column subsets keep the canonical order") {
  ReportRow a{"sys", {{"TER", 10.0}, {"BLEU", 20.0}}};
  std::string out = RenderComparison({a});
  CHECK(out ==
        "system\tBLEU↑\tTER↓\n"
        "sys\t20.00\t10.00\n");
}

TEST_CASE("inconsistent rows are rejected") {
  ReportRow a{"a", {{"BLEU", 1.0}, {"TER", 2.0}}};
  ReportRow b{"b", {{"BLEU", 1.0}}};
  CHECK_THROWS_AS(RenderComparison({a, b}), DataError);

  ReportRow c{"c", {{"BLEU", 1.0}, {"CHRF1", 2.0}}};
  CHECK_THROWS_AS(RenderComparison({a, c}), DataError);

  ReportRow unknown{"u", {{"BLEU", 1.0}, {"WER", 2.0}}};
  CHECK_THROWS_AS(RenderComparison({unknown}), DataError);
}

TEST_CASE("tsv alignment pads to display width") {
  std::string aligned = AlignTsv("ab\tc\nlonger\tx\n");
  CHECK(aligned ==
        "ab      c\n"
        "longer  x\n");

  // The two-byte arrow counts as one display cell.
  std::string arrows = AlignTsv("x↑\tb\nyyy\tc\n");
  CHECK(arrows ==
        "x↑   b\n"
        "yyy  c\n");

  CHECK(AlignTsv("") == "");
  CHECK(AlignTsv("single\n") == "single\n");
}

TEST_CASE("alignment leaves cell text intact") {
  std::string tsv = RenderComparison(
      {{"sys", {{"BLEU", 1.0}, {"TER", 2.0}}}});
  std::string aligned = AlignTsv(tsv);
  CHECK(aligned.find("BLEU↑") != std::string::npos);
  CHECK(aligned.find("1.00") != std::string::npos);
  CHECK(aligned.find('\t') == std::string::npos);
}
