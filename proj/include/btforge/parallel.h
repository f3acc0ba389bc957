// include/btforge/parallel.h

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

#ifndef BTFORGE_PARALLEL_H_
#define BTFORGE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace btforge {

// Runs fn(begin, end) over disjoint chunks of [0, n).  Each index is
// processed exactly once and workers write only to their own slots, so
// results never depend on the thread count.  threads <= 1 runs inline.
void ParallelFor(size_t n, int threads,
                 const std::function<void(size_t, size_t)> &fn);

}  // namespace btforge

#endif  // BTFORGE_PARALLEL_H_
