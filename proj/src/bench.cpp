#include "cova/bench.hpp"

#include <chrono>
#include <ostream>
#include <random>
#include <stdexcept>

#include "cova/covers.hpp"
#include "cova/enumerate.hpp"
#include "cova/sima.hpp"

namespace cova {

namespace {

BenchRecord time_pipeline(std::string label, const Text& x, int* alpha = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  const CoverArray c = minimal_cover_array(x);
  const InferenceResult r = infer(c);
  const auto stop = std::chrono::steady_clock::now();
  if (alpha) *alpha = alphabet_size(r.text);
  BenchRecord rec;
  rec.label = std::move(label);
  rec.n = x.size();
  rec.wall_time_s = std::chrono::duration<double>(stop - start).count();
  rec.ops = r.stats.ops();
  return rec;
}

}  // namespace

std::vector<BenchRecord> bench_run(int fib_min, int fib_max) {
  if (fib_min < 4 || fib_min > fib_max || fib_max > 34)
    throw std::invalid_argument("bench_run: range must satisfy 4 <= min <= max <= 34");
  std::vector<BenchRecord> out;
  for (int i = fib_min; i <= fib_max; ++i)
    out.push_back(time_pipeline("fib-" + std::to_string(i), fibonacci_word(i)));
  return out;
}

RandomBenchResult bench_random(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Text x(n, 'a');
  for (auto& ch : x) ch = coin(rng) ? 'b' : 'a';
  RandomBenchResult res;
  res.record = time_pipeline("random-" + std::to_string(n), x, &res.alphabet_size);
  return res;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "label,n,wall_time_s,ops\n";
  for (const auto& r : records)
    os << r.label << ',' << r.n << ',' << r.wall_time_s << ',' << r.ops << '\n';
}

}  // namespace cova
