#pragma once

#include <cstdint>
#include <vector>

namespace structgen {

// Deterministic 64-bit generator (splitmix64). Standard-library
// distributions and std::shuffle are implementation-defined, so all
// sampling in this project goes through this class to keep emitted
// corpora byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n). n must be > 0.
    std::size_t below(std::size_t n) {
        // Rejection sampling to avoid modulo bias.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return static_cast<std::size_t>(v % n);
    }

    bool coin() { return (next() & 1) != 0; }

    // Derive an independent stream, e.g. per instance index.
    Rng fork(std::uint64_t salt) {
        return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL));
    }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[below(items.size())];
    }

    // Fisher-Yates, stable across platforms.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace structgen
