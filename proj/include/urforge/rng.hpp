#pragma once

#include <bit>
#include <cstdint>

namespace urforge {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// splitmix64; fully specified so seeded runs agree across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    // Uniformly chosen set bit of a nonzero mask.
    int pick_bit(std::uint64_t mask) {
        auto k = below(static_cast<std::uint64_t>(std::popcount(mask)));
        while (k--) mask &= mask - 1;
        return std::countr_zero(mask);
    }

private:
    std::uint64_t s_;
};

}  // namespace urforge
