#ifndef COVA_BENCH_HPP
#define COVA_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cova {

struct BenchRecord {
  std::string label;
  std::size_t n = 0;
  double wall_time_s = 0.0;
  std::uint64_t ops = 0;  // stack pushes + border-walk fallbacks
};

// For each Fibonacci word F(i), i in [fib_min, fib_max]: compute its
// minimal cover array, run inference on it, record wall time and
// instrumented operation counts. Bounds: 4 <= fib_min <= fib_max <= 34.
std::vector<BenchRecord> bench_run(int fib_min, int fib_max);

struct RandomBenchResult {
  BenchRecord record;
  int alphabet_size = 0;  // of the inferred witness
};

// Same pipeline on a uniform random binary string of length n (fixed
// seed for reproducibility of the ops column).
RandomBenchResult bench_random(std::size_t n, std::uint32_t seed = 12345);

// CSV with header label,n,wall_time_s,ops; newline-terminated rows.
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

}  // namespace cova

#endif
