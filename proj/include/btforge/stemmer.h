// include/btforge/stemmer.h

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

#ifndef BTFORGE_STEMMER_H_
#define BTFORGE_STEMMER_H_

#include <string>

namespace btforge {

// Crude suffix stripper used only to decide whether two surface forms
// share a base.  Rules are tried in a fixed order, first match strips,
// and stripping repeats until no rule fires, which makes the function
// idempotent by construction.  Rules (suffix -> replacement, minimum
// bytes that must precede the suffix):
//
//   sses -> ss (2)   ies -> i (2)   s -> "" (3, not after s)
//   ed -> "" (3)   ing -> "" (3)   ly -> "" (3)   est -> "" (3)
//   er -> "" (3)
//
// Suffix tests are byte-wise; multi-byte UTF-8 trails never match the
// ASCII suffixes, so non-English words pass through unchanged.
std::string Stem(const std::string &word);

}  // namespace btforge

#endif  // BTFORGE_STEMMER_H_
