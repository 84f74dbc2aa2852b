#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace lsa {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Single-seed generator with deterministic per-subtask splitting; all
// randomness in a run derives from one root seed.
class Rng {
  public:
    explicit Rng(uint64_t seed) : seed_(splitmix64(seed)), g_(seed_) {}

    Rng split(const std::string& tag) const { return Rng(seed_ ^ fnv1a(tag)); }
    Rng split(uint64_t salt) const { return Rng(seed_ ^ splitmix64(salt)); }

    uint64_t next() { return g_(); }
    // uniform in [0, bound)
    uint64_t below(uint64_t bound) {
        std::uniform_int_distribution<uint64_t> d(0, bound - 1);
        return d(g_);
    }
    long int_in(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(g_);
    }

  private:
    uint64_t seed_ = 0;
    std::mt19937_64 g_;
};

}  // namespace lsa
