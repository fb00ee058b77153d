#pragma once

#include <vector>

#include "sudoku/grid.hpp"

namespace sudoku {

// Closed form of the circular-shift schedule: the symbol placed at (row, col)
// is ((row mod n)*n + row/n + col) mod N. Row r is the ascending first row
// rotated left by (r mod n)*n + r/n symbols: n per step inside a band, one
// per band start.
//
// Throws std::out_of_range for row/col outside 0..N-1.
int base_value(Order order, int row, int col);

// The full base solution, filled from the closed form. Serial.
Grid build_base_solution(Order order);

namespace par {
// OpenMP row-parallel fill. Identical output to sudoku::build_base_solution.
Grid build_base_solution(Order order);
}  // namespace par

// The same grid built the literal way: row 0 ascending; each later row in a
// band is the previous row rotated left by n; each band start is row 0
// rotated left by the band index. Kept as an independent code path against
// the closed form.
Grid build_iterative(Order order);

// Base solution under a relabeled symbol set: cell (r, c) holds
// symbol_perm[base_value(r, c)]. symbol_perm must be a bijection on 0..N-1
// (std::invalid_argument otherwise).
Grid build_with_alphabet_order(Order order, const std::vector<int>& symbol_perm);

}  // namespace sudoku
