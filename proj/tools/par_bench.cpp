// Compares the OpenMP kernels against their serial reference
// implementations: reward propagation (gather vs scatter), the exact
// oracle (branch-parallel vs single DFS), and the per-fleet solver loop
// (threads=N vs threads=1).
#include <chrono>
#include <cstdio>
#include <vector>

#include "flowdec/core.hpp"
#include "flowdec/flowdec.hpp"
#include "flowdec/oracle.hpp"
#include "flowdec/scenario.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const auto& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    fn();
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count();
    if (ms < best) best = ms;
  }
  return best;
}

void report(const char* kernel, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", kernel, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel columns run serially\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    const auto grid = flowdec::make_grid(200, 200);
    std::vector<double> row(grid.vertex_count(), 0.0);
    row[0] = 1.0;
    volatile double sink = 0.0;
    const double serial = time_ms(
        [&] {
          auto r = row;
          for (int i = 0; i < 50; ++i) r = flowdec::propagate_serial(r, grid);
          sink = r[0];
        },
        5);
    const double parallel = time_ms(
        [&] {
          auto r = row;
          for (int i = 0; i < 50; ++i) r = flowdec::propagate(r, grid);
          sink = r[0];
        },
        5);
    report("propagate (200x200, 50x)", serial, parallel);
  }

  {
    flowdec::ScenarioParams params{3, 3, 3, 3, 1, 2, 7};
    const auto instance = flowdec::generate(params);
    const double serial =
        time_ms([&] { flowdec::exact_solve(instance, 1); }, 3);
    const double parallel =
        time_ms([&] { flowdec::exact_solve(instance, 0); }, 3);
    report("oracle (3x3, T=3, F=3)", serial, parallel);
  }

  {
    flowdec::ScenarioParams params{10, 10, 8, 8, 5, 3, 11};
    const auto instance = flowdec::generate(params);
    const double serial = time_ms([&] { flowdec::flowdec(instance, 1); }, 3);
    const double parallel = time_ms([&] { flowdec::flowdec(instance, 0); }, 3);
    report("flowdec (10x10, T=8, F=8)", serial, parallel);
  }
  return 0;
}
