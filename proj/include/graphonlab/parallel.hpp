#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace graphonlab {

// Worker count resolution: explicit set_worker_count() (CLI --threads),
// else GRAPHONLAB_THREADS, else hardware concurrency.
std::size_t worker_count();
void set_worker_count(std::size_t n);

// Runs fn(chunk_index, begin, end) over [0, n) split into one contiguous
// chunk per worker. Chunk boundaries depend only on n and the worker
// count, and callers merge per-chunk results in chunk order, so outcomes
// are independent of scheduling.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace graphonlab
