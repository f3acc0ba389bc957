// include/btforge/tokenizer.h

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

#ifndef BTFORGE_TOKENIZER_H_
#define BTFORGE_TOKENIZER_H_

#include <string>

#include "btforge/types.h"

namespace btforge {

// Splits a raw line on Unicode whitespace, then iteratively detaches
// the punctuation characters . , ! ? ; : " ( ) from token edges.
// Interior punctuation is never split, so decimal numbers, URLs and
// hyphenated words survive intact.  Idempotent over join+retokenize.
Sentence Tokenize(const std::string &line);

}  // namespace btforge

#endif  // BTFORGE_TOKENIZER_H_
