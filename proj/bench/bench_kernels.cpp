// Times the OpenMP kernels against their serial reference implementations:
// base-solution fill and full-grid validation, at a few orders. Each cell is
// best-of-5 after one warmup run.
#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>

#include "sudoku/construct.hpp"
#include "sudoku/grid.hpp"

using namespace sudoku;

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double best_of_5_ms(Fn&& fn) {
    fn();  // warmup
    double best = 1e300;
    for (int run = 0; run < 5; ++run) {
        const auto start = Clock::now();
        fn();
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (ms < best) best = ms;
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n\n");
#endif
    std::printf("%-28s %8s %12s %12s %9s\n", "kernel", "order", "serial ms", "parallel ms",
                "speedup");

    for (const int n : {8, 16, 32, 48}) {
        const Order order(n);

        const double fill_serial = best_of_5_ms([&] { (void)build_base_solution(order); });
        const double fill_par = best_of_5_ms([&] { (void)par::build_base_solution(order); });
        std::printf("%-28s %8d %12.3f %12.3f %8.2fx\n", "base-solution fill", n, fill_serial,
                    fill_par, fill_serial / fill_par);

        const Grid grid = build_base_solution(order);
        const double val_serial = best_of_5_ms([&] { (void)validate(grid); });
        const double val_par = best_of_5_ms([&] { (void)par::validate(grid); });
        std::printf("%-28s %8d %12.3f %12.3f %8.2fx\n", "validation scan", n, val_serial, val_par,
                    val_serial / val_par);
    }
    return 0;
}
