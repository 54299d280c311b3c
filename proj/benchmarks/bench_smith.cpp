// Smith normal form over Q[t]: decomposition cost by matrix size.

#include <benchmark/benchmark.h>

#include <random>

#include "k3fib/poly_matrix.hpp"
#include "k3fib/smith.hpp"

namespace {

k3fib::PolyMatrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, 2);
  k3fib::PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k3fib::TPoly p;
      const int d = deg(rng);
      for (int k = 0; k <= d; ++k)
        p += k3fib::TPoly::monomial(k, k3fib::Rational(coeff(rng)));
      m.at(i, j) = p;
    }
  return m;
}

void smith_decomposition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const k3fib::PolyMatrix m = random_matrix(n, 0x5eedu + state.range(0));
  for (auto _ : state) {
    k3fib::SmithDecomposition s = k3fib::smith_normal_form(m);
    benchmark::DoNotOptimize(s.d);
  }
}

}  // namespace

BENCHMARK(smith_decomposition)->DenseRange(2, 6);

BENCHMARK_MAIN();
