// Torsion decomposition cost by graded degree on a fixed special fibre.

#include <benchmark/benchmark.h>

#include "k3fib/cover.hpp"
#include "k3fib/five_tuple.hpp"
#include "k3fib/torsion.hpp"

namespace {

const char* kInput = R"({
  "beta": "y^3 + x3^6",
  "e3_twist": -4,
  "name": "bench",
  "sigma2": [
    ["1", "0", "0", "1", "0", "0"],
    ["0", "1", "0", "0", "0", "0"],
    ["0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "1"],
    ["0", "0", "0", "-t", "0", "0"]
  ]
})";

void torsion_by_degree(benchmark::State& state) {
  const k3fib::RAlgebra r =
      k3fib::build_r(k3fib::parse_five_tuple(kInput));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    k3fib::TorsionReport report = k3fib::torsion_decomposition(r, n);
    benchmark::DoNotOptimize(report);
  }
}

}  // namespace

BENCHMARK(torsion_by_degree)->DenseRange(2, 7);

BENCHMARK_MAIN();
