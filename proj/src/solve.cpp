#include "sudoku/solve.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "sudoku/rng.hpp"

namespace sudoku {

namespace {

// Depth-first search over one grid. Candidate sets are N-bit masks packed in
// 64-bit words, one per row, column and box; place/unplace keep them in sync
// with the cell array.
class Searcher {
public:
    Searcher(const Grid& grid, std::uint64_t cap,
             const std::function<void(const std::vector<Cell>&)>& sink)
        : n_(grid.box_side()),
          side_(grid.side()),
          words_((grid.side() + 63) / 64),
          cap_(cap),
          sink_(sink),
          cells_(grid.cells()),
          row_used_(static_cast<std::size_t>(side_) * words_, 0),
          col_used_(static_cast<std::size_t>(side_) * words_, 0),
          box_used_(static_cast<std::size_t>(side_) * words_, 0) {
        empty_count_ = 0;
        for (int idx = 0; idx < side_ * side_; ++idx) {
            const Cell v = cells_[static_cast<std::size_t>(idx)];
            if (v == kEmpty) {
                ++empty_count_;
            } else if (used_anywhere(idx, v)) {
                conflict_ = true;  // duplicate givens: zero solutions
            } else {
                mark(idx, v, true);
            }
        }
    }

    void run() {
        if (conflict_) {
            exhausted_ = true;
            return;
        }
        exhausted_ = dfs();
    }

    std::uint64_t found() const { return found_; }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t word_mask(int w) const {
        const int tail = side_ - w * 64;
        return tail >= 64 ? ~0ull : (1ull << tail) - 1;
    }

    int box_of(int idx) const {
        return (idx / side_ / n_) * n_ + (idx % side_) / n_;
    }

    std::uint64_t* unit_words(std::vector<std::uint64_t>& v, int unit) {
        return v.data() + static_cast<std::size_t>(unit) * words_;
    }

    bool used_anywhere(int idx, int symbol) {
        const std::uint64_t bit = 1ull << (symbol % 64);
        const int w = symbol / 64;
        return ((unit_words(row_used_, idx / side_)[w] | unit_words(col_used_, idx % side_)[w] |
                 unit_words(box_used_, box_of(idx))[w]) &
                bit) != 0;
    }

    void mark(int idx, int symbol, bool on) {
        const std::uint64_t bit = 1ull << (symbol % 64);
        const int w = symbol / 64;
        if (on) {
            unit_words(row_used_, idx / side_)[w] |= bit;
            unit_words(col_used_, idx % side_)[w] |= bit;
            unit_words(box_used_, box_of(idx))[w] |= bit;
        } else {
            unit_words(row_used_, idx / side_)[w] &= ~bit;
            unit_words(col_used_, idx % side_)[w] &= ~bit;
            unit_words(box_used_, box_of(idx))[w] &= ~bit;
        }
    }

    void place(int idx, int symbol) {
        cells_[static_cast<std::size_t>(idx)] = symbol;
        mark(idx, symbol, true);
        --empty_count_;
    }

    void unplace(int idx) {
        const int symbol = cells_[static_cast<std::size_t>(idx)];
        mark(idx, symbol, false);
        cells_[static_cast<std::size_t>(idx)] = kEmpty;
        ++empty_count_;
    }

    // Candidate count for an empty cell; lowest candidate symbol in *lowest.
    int count_candidates(int idx, int* lowest) const {
        const std::uint64_t* r = row_used_.data() + static_cast<std::size_t>(idx / side_) * words_;
        const std::uint64_t* c = col_used_.data() + static_cast<std::size_t>(idx % side_) * words_;
        const std::uint64_t* b = box_used_.data() + static_cast<std::size_t>(box_of(idx)) * words_;
        int count = 0;
        *lowest = -1;
        for (int w = 0; w < words_; ++w) {
            const std::uint64_t free = ~(r[w] | c[w] | b[w]) & word_mask(w);
            count += std::popcount(free);
            if (*lowest < 0 && free != 0) *lowest = w * 64 + std::countr_zero(free);
        }
        return count;
    }

    void append_candidates(int idx, std::vector<int>& out) const {
        const std::uint64_t* r = row_used_.data() + static_cast<std::size_t>(idx / side_) * words_;
        const std::uint64_t* c = col_used_.data() + static_cast<std::size_t>(idx % side_) * words_;
        const std::uint64_t* b = box_used_.data() + static_cast<std::size_t>(box_of(idx)) * words_;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t free = ~(r[w] | c[w] | b[w]) & word_mask(w);
            while (free != 0) {
                out.push_back(w * 64 + std::countr_zero(free));
                free &= free - 1;
            }
        }
    }

    // Fills every cell with a single candidate, row-major, until a fixpoint.
    // Filled cells are recorded for undo. False on a cell with no candidate.
    bool propagate(std::vector<int>& placed) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int idx = 0; idx < side_ * side_; ++idx) {
                if (cells_[static_cast<std::size_t>(idx)] != kEmpty) continue;
                int lowest = -1;
                const int count = count_candidates(idx, &lowest);
                if (count == 0) return false;
                if (count == 1) {
                    place(idx, lowest);
                    placed.push_back(idx);
                    changed = true;
                }
            }
        }
        return true;
    }

    // Fewest candidates, ties to the lowest row-major index. Only called when
    // at least one empty cell remains, and propagation has left none with
    // fewer than two candidates.
    int select_cell() const {
        int best_idx = -1;
        int best_count = side_ + 1;
        for (int idx = 0; idx < side_ * side_; ++idx) {
            if (cells_[static_cast<std::size_t>(idx)] != kEmpty) continue;
            int lowest = -1;
            const int count = count_candidates(idx, &lowest);
            if (count < best_count) {
                best_count = count;
                best_idx = idx;
            }
        }
        return best_idx;
    }

    // False propagates a stop (solution cap reached) up the whole tree.
    bool dfs() {
        ++nodes_;
        std::vector<int> placed;
        bool keep_going = true;
        if (propagate(placed)) {
            if (empty_count_ == 0) {
                ++found_;
                if (sink_) sink_(cells_);
                keep_going = found_ < cap_;
            } else {
                const int idx = select_cell();
                std::vector<int> symbols;
                append_candidates(idx, symbols);
                for (const int s : symbols) {
                    place(idx, s);
                    keep_going = dfs();
                    unplace(idx);
                    if (!keep_going) break;
                }
            }
        }
        for (auto it = placed.rbegin(); it != placed.rend(); ++it) unplace(*it);
        return keep_going;
    }

    int n_;
    int side_;
    int words_;
    std::uint64_t cap_;
    const std::function<void(const std::vector<Cell>&)>& sink_;

    std::vector<Cell> cells_;
    std::vector<std::uint64_t> row_used_, col_used_, box_used_;
    int empty_count_ = 0;
    bool conflict_ = false;

    std::uint64_t found_ = 0;
    bool exhausted_ = false;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SolveOutcome solve(const Grid& grid, std::uint64_t cap) {
    if (cap == 0) {
        throw std::invalid_argument("solve: cap must be positive");
    }
    SolveOutcome outcome;
    const std::function<void(const std::vector<Cell>&)> sink =
        [&outcome, &grid](const std::vector<Cell>& cells) {
            outcome.solutions.push_back(make_grid_unchecked(grid.order(), cells));
        };
    Searcher searcher(grid, cap, sink);
    searcher.run();
    outcome.exhausted = searcher.exhausted();
    outcome.nodes_expanded = searcher.nodes();
    return outcome;
}

std::pair<std::uint64_t, bool> count_solutions(const Grid& grid, std::uint64_t cap) {
    if (cap == 0) {
        throw std::invalid_argument("count_solutions: cap must be positive");
    }
    static const std::function<void(const std::vector<Cell>&)> no_sink;
    Searcher searcher(grid, cap, no_sink);
    searcher.run();
    return {searcher.found(), searcher.exhausted()};
}

Grid make_puzzle(const Grid& solution, std::uint64_t seed, int target_clues) {
    if (!validate(solution).is_solution()) {
        throw std::invalid_argument("make_puzzle: input is not a complete valid solution");
    }
    const int total = solution.order().cell_count();
    if (target_clues < 0 || target_clues > total) {
        throw std::invalid_argument("make_puzzle: target_clues outside 0.." + std::to_string(total));
    }

    std::vector<int> visit(static_cast<std::size_t>(total));
    std::iota(visit.begin(), visit.end(), 0);
    Xorshift64Star rng(seed);
    seeded_shuffle(visit, rng);

    // A cell whose removal breaks uniqueness stays broken as more clues go
    // (solutions only accumulate), so one pass over the cells is exhaustive.
    std::vector<Cell> cells = solution.cells();
    int clues = total;
    for (const int idx : visit) {
        if (clues <= target_clues) break;
        const Cell kept = cells[static_cast<std::size_t>(idx)];
        cells[static_cast<std::size_t>(idx)] = kEmpty;
        const auto [count, exhausted] =
            count_solutions(make_grid_unchecked(solution.order(), cells), 2);
        if (count == 1) {
            --clues;
        } else {
            cells[static_cast<std::size_t>(idx)] = kept;
        }
    }
    return make_grid_unchecked(solution.order(), std::move(cells));
}

}  // namespace sudoku
