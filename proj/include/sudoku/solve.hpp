#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sudoku/grid.hpp"

namespace sudoku {

// Practically unlimited solution cap.
inline constexpr std::uint64_t kNoSolutionCap = UINT64_MAX;

struct SolveOutcome {
    std::vector<Grid> solutions;           // in search order, length <= cap
    bool exhausted = false;                // search space fully explored
    std::uint64_t nodes_expanded = 0;      // search nodes entered, root included

    bool unsatisfiable() const { return exhausted && solutions.empty(); }
};

// Deterministic backtracking search with naked-single propagation. Branch
// cell: fewest candidates, ties broken by lowest (row, col); candidate
// symbols tried in ascending index. Every returned solution is complete,
// violation-free, and extends the input's filled cells. Stops after cap
// solutions; exhausted is true iff the search ran to natural completion.
// Conflicting filled cells are a normal outcome: zero solutions, exhausted.
SolveOutcome solve(const Grid& grid, std::uint64_t cap = kNoSolutionCap);

// Same search without materializing grids. Returns (count, exhausted);
// count equals solve(grid, cap).solutions.size().
std::pair<std::uint64_t, bool> count_solutions(const Grid& grid, std::uint64_t cap);

// Masks a solution into a puzzle: visits cells in seeded-random order
// (Fisher-Yates over cell indices, xorshift64* stream) and keeps a removal
// only if the grid still has exactly one completion. Stops once target_clues
// is reached or every cell has been tried. The result always has exactly one
// solution, equal to the input. The input must be a complete, violation-free
// solution and 0 <= target_clues <= N*N (std::invalid_argument otherwise).
Grid make_puzzle(const Grid& solution, std::uint64_t seed, int target_clues);

}  // namespace sudoku
