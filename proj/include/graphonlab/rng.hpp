#pragma once

#include <cstdint>

namespace graphonlab {

// SplitMix64 finalizer; full-avalanche 64 -> 64 mix.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so a fixed seed reproduces results no matter
// how the draws are scheduled across threads.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t at(std::uint64_t stream, std::uint64_t counter) const {
        return mix64(seed_ ^ mix64(stream ^ mix64(counter)));
    }
    double uniform_at(std::uint64_t stream, std::uint64_t counter) const {
        return static_cast<double>(at(stream, counter) >> 11) * 0x1.0p-53;
    }

    // Sequential convenience for single-threaded heuristics.
    std::uint64_t next() { return at(0, counter_++); }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) without modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = bound * ((~0ULL / bound));
        for (;;) {
            std::uint64_t x = next();
            if (x < threshold) return x % bound;
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace graphonlab
