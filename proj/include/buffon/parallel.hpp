#pragma once

#include <cstddef>
#include <functional>

namespace buffon {

// 0 means: BUFFON_THREADS from the environment if set, else hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Calls body(begin, end) on contiguous chunks of [0, count), one chunk per
// worker. Chunk boundaries depend only on count and the worker count.
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace buffon
