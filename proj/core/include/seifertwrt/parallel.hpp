// SPDX-License-Identifier: Apache-2.0
// Deterministic chunked parallelism.  Work is split into fixed-size chunks
// whose boundaries do not depend on the thread count; per-chunk results are
// reduced in index order, so outputs are byte-identical for any thread count.

#ifndef SEIFERT_WRT_PARALLEL_HPP
#define SEIFERT_WRT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace swrt {

// Thread budget: min(hardware concurrency, SEIFERT_WRT_THREADS if set), >= 1.
int thread_budget();

// Runs fn(chunk_index, begin, end) over [0, n) split into chunks of the given
// size.  Chunks may execute concurrently; fn must only write to state owned by
// its chunk index.
void run_chunked(std::size_t n, std::size_t chunk_size,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace swrt

#endif
