// Compares the serial reference kernels against their OpenMP counterparts on
// a few representative workloads and verifies they agree exactly.

#include <omp.h>

#include <chrono>
#include <iostream>

#include "durfee/monomial.hpp"
#include "durfee/report.hpp"
#include "durfee/search.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_colength() {
  // wide staircase in 3 variables: ~8e7 box points
  durfee::MonomialIdeal a = durfee::make_ideal(
      3, {{430, 0, 0}, {0, 430, 0}, {0, 0, 430}, {200, 150, 0}, {0, 180, 210}, {120, 0, 260}});
  auto t0 = Clock::now();
  durfee::Int serial = durfee::colength_serial(a);
  double serial_ms = ms_since(t0);
  t0 = Clock::now();
  durfee::Int parallel = durfee::colength(a);
  double parallel_ms = ms_since(t0);
  std::cout << "colength (box " << 430LL * 430 * 430 << " points)\n"
            << "  serial   " << serial_ms << " ms -> " << serial.get_str() << "\n"
            << "  openmp   " << parallel_ms << " ms -> " << parallel.get_str() << "  ("
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x)\n";
  if (serial != parallel) {
    std::cerr << "MISMATCH between serial and OpenMP colength\n";
    std::exit(1);
  }
}

void bench_chi_scan() {
  durfee::ResolutionGraph g = durfee::make_star(-2, 0, {{3, -2}, {2, -2}, {2, -3}});
  durfee::LatticeContext ctx = durfee::build_context(g);
  durfee::Cycle lo = durfee::zero_cycle(ctx.s);
  durfee::Cycle hi = durfee::ones_cycle(ctx.s);
  for (auto& c : lo.coords) c = -4;
  for (auto& c : hi.coords) c = 5;  // 10^8 points over 8 vertices
  auto t0 = Clock::now();
  durfee::SearchResult serial = durfee::brute_force_min_chi_serial(ctx, lo, hi, 200000000);
  double serial_ms = ms_since(t0);
  t0 = Clock::now();
  durfee::SearchResult parallel = durfee::brute_force_min_chi(ctx, lo, hi, 200000000);
  double parallel_ms = ms_since(t0);
  std::cout << "min-chi box scan (" << serial.nodes_visited << " points, s = " << ctx.s << ")\n"
            << "  serial   " << serial_ms << " ms -> " << durfee::rat_str(serial.optimum_value)
            << "\n"
            << "  openmp   " << parallel_ms << " ms -> "
            << durfee::rat_str(parallel.optimum_value) << "  ("
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x)\n";
  if (serial.optimum_value != parallel.optimum_value ||
      !(serial.canonical == parallel.canonical) ||
      serial.minimizer_count != parallel.minimizer_count) {
    std::cerr << "MISMATCH between serial and OpenMP box scan\n";
    std::exit(1);
  }
}

void bench_scan_driver() {
  durfee::ConjectureScanOptions opt;
  opt.count = 200;
  opt.max_vertices = 6;
  opt.seed = 7;
  auto t0 = Clock::now();
  durfee::ConjectureScanSummary s = durfee::run_conjecture_scan(opt);
  double ms = ms_since(t0);
  std::cout << "conjecture scan driver (200 instances, OpenMP batch)\n"
            << "  " << ms << " ms, violations " << s.violations << "\n";
}

}  // namespace

int main() {
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  bench_colength();
  bench_chi_scan();
  bench_scan_driver();
  return 0;
}
