#include "graphonlab/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace graphonlab {

namespace {

std::atomic<std::size_t> g_workers{0};

std::size_t default_workers() {
    if (const char* env = std::getenv("GRAPHONLAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

std::size_t worker_count() {
    std::size_t w = g_workers.load(std::memory_order_relaxed);
    return w == 0 ? default_workers() : w;
}

void set_worker_count(std::size_t n) {
    g_workers.store(n, std::memory_order_relaxed);
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t workers = worker_count();
    if (workers > n) workers = n;
    if (workers <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t c = 0; c < workers; ++c) {
        std::size_t begin = c * chunk;
        std::size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) break;
        threads.emplace_back([=, &fn] { fn(c, begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace graphonlab
