// Copyright 2026 The COVE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace cove {

// Worker count used when a caller passes 0: COVE_THREADS if set and valid,
// otherwise std::thread::hardware_concurrency() (at least 1).
unsigned default_threads();

// Splits [0, count) into contiguous chunks and runs `body(begin, end)` on up
// to `threads` workers (0 = default_threads()). Chunk boundaries depend only
// on `count` and the worker count; callers that write to disjoint per-index
// slots get results independent of scheduling.
void parallel_for_chunks(
    std::size_t count, unsigned threads,
    const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cove
