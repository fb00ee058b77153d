#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace sudoku {

// xorshift64* generator. State update per draw:
//
//   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
//   output = x * 0x2545F4914F6CDD1D
//
// All arithmetic is on uint64_t, so the sequence is identical on every
// platform. A zero seed is remapped to 0x9E3779B97F4A7C15; the all-zero state
// is the one fixed point of the shift map.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    // Uniform draw from [0, bound), bound >= 1. Rejection below the largest
    // multiple of bound, so there is no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw = next();
        while (draw >= limit) draw = next();
        return draw % bound;
    }

private:
    std::uint64_t state_;
};

// Fisher-Yates driven by explicit next_below calls. std::shuffle is
// implementation-defined, so it cannot back a cross-platform contract.
template <typename T>
void seeded_shuffle(std::vector<T>& values, Xorshift64Star& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(values[i - 1], values[j]);
    }
}

inline std::vector<int> random_permutation(int count, Xorshift64Star& rng) {
    std::vector<int> perm(static_cast<std::size_t>(count));
    std::iota(perm.begin(), perm.end(), 0);
    seeded_shuffle(perm, rng);
    return perm;
}

}  // namespace sudoku
