// Copyright 2026 The qclean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qclean {

/// Runs body(begin, end) over contiguous chunks of [0, count) on up to
/// `threads` threads. Chunk boundaries depend only on count and threads, so a
/// caller that reduces per-chunk results in chunk order gets a deterministic
/// answer. The first exception thrown by any chunk is rethrown.
template <class Body>
void parallel_chunks(std::size_t count, unsigned threads, Body body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        body(std::size_t{0}, count, 0u);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; t++) {
        const std::size_t begin = count * t / threads;
        const std::size_t end = count * (t + 1) / threads;
        pool.emplace_back([&, begin, end, t] {
            try {
                body(begin, end, t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto &th : pool) th.join();
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace qclean
