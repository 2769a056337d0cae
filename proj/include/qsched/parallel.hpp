// Copyright 2026 The qsched Authors
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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace qsched {

/// Work over an index space is always cut into chunks of this many entries,
/// independent of the thread count, so per-chunk partial results (and the
/// in-order combination of them) are identical however many workers run.
inline constexpr std::size_t kChunkSize = std::size_t{1} << 14;

/// Worker cap. Reads QSCHED_THREADS (positive integer); falls back to the
/// hardware concurrency.
unsigned worker_count();

/// Runs body(chunk_index, begin, end) for every fixed-size chunk of [0, n).
void parallel_chunks(std::uint64_t n,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)> &body);

inline std::size_t chunk_count(std::uint64_t n) {
    return static_cast<std::size_t>((n + kChunkSize - 1) / kChunkSize);
}

/// Deterministic reduction: per-chunk partials are summed in chunk order.
template <typename T, typename F>
T chunked_sum(std::uint64_t n, T zero, F &&term) {
    std::vector<T> partial(chunk_count(n), zero);
    parallel_chunks(n, [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
        T acc = zero;
        for (std::uint64_t k = begin; k < end; ++k) acc += term(k);
        partial[c] = acc;
    });
    T total = zero;
    for (const T &p : partial) total += p;
    return total;
}

}  // namespace qsched
