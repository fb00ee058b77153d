#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "sudoku/grid.hpp"

namespace sudoku {

// The validity-preserving transformation vocabulary. Every variant maps
// solutions to solutions: relabeling is a bijection on symbols, the swaps
// only rearrange rows/columns inside their band/stack structure, and
// transposition exchanges the two unit families.

struct RelabelSymbols {
    std::vector<int> perm;  // bijection on 0..N-1
    bool operator==(const RelabelSymbols&) const = default;
};

struct SwapRowsInBand {
    int band;  // 0..n-1
    int i, j;  // rows within the band, 0..n-1
    bool operator==(const SwapRowsInBand&) const = default;
};

struct SwapBands {
    int a, b;  // 0..n-1
    bool operator==(const SwapBands&) const = default;
};

struct SwapColsInStack {
    int stack;  // 0..n-1
    int i, j;   // columns within the stack, 0..n-1
    bool operator==(const SwapColsInStack&) const = default;
};

struct SwapStacks {
    int a, b;  // 0..n-1
    bool operator==(const SwapStacks&) const = default;
};

struct Transpose {
    bool operator==(const Transpose&) const = default;
};

using Transform = std::variant<RelabelSymbols, SwapRowsInBand, SwapBands,
                               SwapColsInStack, SwapStacks, Transpose>;

// Returns the transformed grid. Throws std::out_of_range for indices outside
// the grid's order and std::invalid_argument for a non-bijective relabeling.
Grid apply_transform(const Grid& grid, const Transform& transform);

// Unrestricted row/column rearrangements. Result row i is input row
// row_perm[i] (columns likewise). No validity guarantee: a permutation that
// crosses band boundaries generally breaks box constraints, so callers
// validate the result themselves.
Grid permute_rows_unchecked(const Grid& grid, const std::vector<int>& row_perm);
Grid permute_cols_unchecked(const Grid& grid, const std::vector<int>& col_perm);

// A seeded, reproducible composition of transforms. The sequence is a pure
// function of (order, seed, steps); see scramble_sequence.
struct ScramblePlan {
    std::uint64_t seed = 0;
    int steps = 0;
};

// Derives the plan's transform sequence. Per step, one xorshift64* stream
// drives: kind = next_below(6) in the order RelabelSymbols, SwapRowsInBand,
// SwapBands, SwapColsInStack, SwapStacks, Transpose; then that kind's
// parameters in declaration order (the relabeling permutation via
// Fisher-Yates). Throws std::invalid_argument for negative steps.
std::vector<Transform> scramble_sequence(Order order, const ScramblePlan& plan);

// Applies the derived sequence. The input must be a complete, violation-free
// solution (std::invalid_argument otherwise); the output then is one too.
Grid scramble(const Grid& grid, const ScramblePlan& plan);

}  // namespace sudoku
