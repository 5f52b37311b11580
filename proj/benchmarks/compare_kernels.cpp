// Times the parallel kernels against their serial counterparts and checks that
// both produce identical results. The enumeration solver splits on the first
// ranked item; the exhaustive weight-condition check splits on quadruples. Run
// from anywhere; prints a table to stdout.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include "fairrank/generators.hpp"
#include "fairrank/metrics.hpp"
#include "fairrank/oracle.hpp"
#include "fairrank/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void print_row(const std::string& kernel, double serial_ms, double parallel_ms,
               bool match) {
  std::cout << std::left << std::setw(34) << kernel << std::right << std::fixed
            << std::setprecision(1) << std::setw(12) << serial_ms << std::setw(12)
            << parallel_ms << std::setw(10) << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << std::setw(10)
            << (match ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "hardware threads: " << omp_get_max_threads() << "\n\n";
#else
  std::cout << "built without OpenMP; both columns run serially\n\n";
#endif
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12)
            << "serial ms" << std::setw(12) << "parallel ms" << std::setw(10) << "speedup"
            << std::setw(10) << "match" << "\n";

  {
    fairrank::GenParams params;
    params.m = 13;
    params.n = 6;
    params.p = 3;
    params.delta = 2;
    params.theta = 0.6;
    params.seed = 41;
    fairrank::Instance inst = fairrank::gen_random(params);

    fairrank::OracleOptions serial_opt;
    serial_opt.threads = 1;
    fairrank::OracleResult serial, parallel;
    const double serial_ms = time_ms([&] { serial = brute_force_solve(inst, serial_opt); });
    const double parallel_ms = time_ms([&] { parallel = brute_force_solve(inst); });
    const bool match = serial.feasible == parallel.feasible &&
                       serial.ranking == parallel.ranking && serial.value == parallel.value &&
                       serial.feasible_count == parallel.feasible_count;
    print_row("enumeration m=13 n=6", serial_ms, parallel_ms, match);
  }

  {
    const int m = 130, n = 90;
    fairrank::Rng rng(7);
    // Random Monge matrix: partial sums of a non-negative grid are always Monge.
    fairrank::Matrix grid(m, n);
    for (int i = m - 1; i >= 0; --i) {
      for (int j = n - 1; j >= 0; --j) {
        double below = i + 1 < m ? grid(i + 1, j) : 0.0;
        double right = j + 1 < n ? grid(i, j + 1) : 0.0;
        double corner = i + 1 < m && j + 1 < n ? grid(i + 1, j + 1) : 0.0;
        grid(i, j) = below + right - corner + rng.uniform_int(0, 3);
      }
    }
    fairrank::MongeWitness serial, parallel;
    const double serial_ms =
        time_ms([&] { serial = fairrank::check_monge_exhaustive(grid, false); });
    const double parallel_ms =
        time_ms([&] { parallel = fairrank::check_monge_exhaustive(grid, true); });
    const bool match = serial.holds == parallel.holds && serial.i1 == parallel.i1 &&
                       serial.i2 == parallel.i2 && serial.j1 == parallel.j1 &&
                       serial.j2 == parallel.j2;
    print_row("quadruple scan 130x90 (holds)", serial_ms, parallel_ms, match);

    grid(m / 2, n / 2) += 1000.0;  // break the exchange inequality mid-matrix
    const double serial2_ms =
        time_ms([&] { serial = fairrank::check_monge_exhaustive(grid, false); });
    const double parallel2_ms =
        time_ms([&] { parallel = fairrank::check_monge_exhaustive(grid, true); });
    const bool match2 = serial.holds == parallel.holds && serial.i1 == parallel.i1 &&
                        serial.i2 == parallel.i2 && serial.j1 == parallel.j1 &&
                        serial.j2 == parallel.j2 && !serial.holds;
    print_row("quadruple scan 130x90 (violated)", serial2_ms, parallel2_ms, match2);
  }

  return 0;
}
