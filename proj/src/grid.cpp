#include "sudoku/grid.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sudoku {

Order::Order(int box_side) : n_(box_side) {
    if (box_side < 1) {
        throw std::invalid_argument("order: box side must be >= 1");
    }
    if (box_side > kMaxOrder) {
        throw std::invalid_argument("order: box side must be <= " + std::to_string(kMaxOrder));
    }
}

Grid::Grid(Order order, std::vector<Cell> cells) : order_(order), cells_(std::move(cells)) {
    const auto expected = static_cast<std::size_t>(order_.cell_count());
    if (cells_.size() != expected) {
        throw std::invalid_argument("grid: expected " + std::to_string(expected) + " cells, got " +
                                    std::to_string(cells_.size()));
    }
    const int side = order_.side();
    for (const Cell c : cells_) {
        if (c != kEmpty && (c < 0 || c >= side)) {
            throw std::out_of_range("grid: symbol index " + std::to_string(c) +
                                    " outside 0.." + std::to_string(side - 1));
        }
    }
}

Grid::Grid(Order order, std::vector<Cell> cells, Trusted) : order_(order), cells_(std::move(cells)) {}

Grid Grid::from_rows(Order order, const std::vector<std::vector<Cell>>& rows) {
    const auto side = static_cast<std::size_t>(order.side());
    if (rows.size() != side) {
        throw std::invalid_argument("grid: expected " + std::to_string(side) + " rows, got " +
                                    std::to_string(rows.size()));
    }
    std::vector<Cell> cells;
    cells.reserve(side * side);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != side) {
            throw std::invalid_argument("grid: row " + std::to_string(r) + " has " +
                                        std::to_string(rows[r].size()) + " cells, expected " +
                                        std::to_string(side));
        }
        cells.insert(cells.end(), rows[r].begin(), rows[r].end());
    }
    return Grid(order, std::move(cells));
}

Grid Grid::empty_grid(Order order) {
    return Grid(order, std::vector<Cell>(static_cast<std::size_t>(order.cell_count()), kEmpty),
                Trusted{});
}

Cell Grid::at(int row, int col) const {
    const int side = order_.side();
    if (row < 0 || row >= side || col < 0 || col >= side) {
        throw std::out_of_range("grid: cell (" + std::to_string(row) + ", " + std::to_string(col) +
                                ") outside a side-" + std::to_string(side) + " grid");
    }
    return cells_[static_cast<std::size_t>(row * side + col)];
}

Grid make_grid_unchecked(Order order, std::vector<Cell> cells) {
    return Grid(order, std::move(cells), Grid::Trusted{});
}

namespace detail {

bool is_permutation_of(const std::vector<int>& perm, int count) {
    if (perm.size() != static_cast<std::size_t>(count)) return false;
    std::vector<bool> seen(static_cast<std::size_t>(count), false);
    for (const int v : perm) {
        if (v < 0 || v >= count || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

}  // namespace detail

const char* unit_kind_name(UnitKind kind) {
    switch (kind) {
        case UnitKind::Row: return "row";
        case UnitKind::Column: return "column";
        case UnitKind::Box: return "box";
    }
    return "?";
}

namespace {

// (row, col) of the k-th cell of a unit, in the unit's scan order.
inline std::pair<int, int> unit_cell(UnitKind kind, int n, int unit, int k) {
    switch (kind) {
        case UnitKind::Row: return {unit, k};
        case UnitKind::Column: return {k, unit};
        case UnitKind::Box:
        default:
            return {(unit / n) * n + k / n, (unit % n) * n + k % n};
    }
}

// Appends one violation per duplicated symbol in the unit, symbols ascending,
// positions in scan order. counts is caller scratch of size >= N.
void scan_unit(const Grid& grid, UnitKind kind, int unit, std::vector<int>& counts,
               std::vector<Violation>& out) {
    const int n = grid.box_side();
    const int side = grid.side();
    const std::vector<Cell>& cells = grid.cells();

    std::fill(counts.begin(), counts.begin() + side, 0);
    for (int k = 0; k < side; ++k) {
        const auto [r, c] = unit_cell(kind, n, unit, k);
        const Cell v = cells[static_cast<std::size_t>(r * side + c)];
        if (v != kEmpty) ++counts[static_cast<std::size_t>(v)];
    }
    for (int symbol = 0; symbol < side; ++symbol) {
        if (counts[static_cast<std::size_t>(symbol)] < 2) continue;
        Violation violation{kind, unit, symbol, {}};
        violation.positions.reserve(static_cast<std::size_t>(counts[static_cast<std::size_t>(symbol)]));
        for (int k = 0; k < side; ++k) {
            const auto [r, c] = unit_cell(kind, n, unit, k);
            if (cells[static_cast<std::size_t>(r * side + c)] == symbol) {
                violation.positions.emplace_back(r, c);
            }
        }
        out.push_back(std::move(violation));
    }
}

constexpr UnitKind kKinds[] = {UnitKind::Row, UnitKind::Column, UnitKind::Box};

}  // namespace

ValidityReport validate(const Grid& grid) {
    const int side = grid.side();
    ValidityReport report;
    report.complete =
        std::none_of(grid.cells().begin(), grid.cells().end(), [](Cell c) { return c == kEmpty; });

    std::vector<int> counts(static_cast<std::size_t>(side));
    for (const UnitKind kind : kKinds) {
        for (int unit = 0; unit < side; ++unit) {
            scan_unit(grid, kind, unit, counts, report.violations);
        }
    }
    return report;
}

namespace par {

ValidityReport validate(const Grid& grid) {
    const int side = grid.side();
    const std::vector<Cell>& cells = grid.cells();

    long long empties = 0;
    const auto total = static_cast<long long>(cells.size());
#pragma omp parallel for reduction(+ : empties) schedule(static)
    for (long long i = 0; i < total; ++i) {
        if (cells[static_cast<std::size_t>(i)] == kEmpty) ++empties;
    }

    // One slot per unit; each unit's scan is independent, and the serial
    // concatenation below restores the canonical ordering.
    std::vector<std::vector<Violation>> per_unit(static_cast<std::size_t>(3 * side));
#pragma omp parallel
    {
        std::vector<int> counts(static_cast<std::size_t>(side));
#pragma omp for schedule(static)
        for (int u = 0; u < 3 * side; ++u) {
            scan_unit(grid, kKinds[u / side], u % side, counts, per_unit[static_cast<std::size_t>(u)]);
        }
    }

    ValidityReport report;
    report.complete = empties == 0;
    for (auto& unit_violations : per_unit) {
        report.violations.insert(report.violations.end(),
                                 std::make_move_iterator(unit_violations.begin()),
                                 std::make_move_iterator(unit_violations.end()));
    }
    return report;
}

}  // namespace par

}  // namespace sudoku
