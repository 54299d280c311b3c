// Straightening cost by word length, for both fibre models.

#include <benchmark/benchmark.h>

#include <random>

#include "k3fib/rewrite.hpp"

namespace {

k3fib::FibreType hyperelliptic() {
  return {k3fib::FibreType::Tag::hyperelliptic, {}};
}

k3fib::FibreType unigonal() {
  k3fib::UnigonalParams params;
  params.normalized = true;
  params.a = k3fib::Rational(1);
  params.b = k3fib::Rational(0);
  params.r = 1;
  return {k3fib::FibreType::Tag::unigonal, params};
}

k3fib::SymPoly random_word(int length, int max_id, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> which(0, max_id);
  k3fib::SymMonomial m = k3fib::SymMonomial::one();
  for (int i = 0; i < length; ++i)
    m = m * k3fib::SymMonomial::gen(static_cast<k3fib::SymId>(which(rng)));
  return k3fib::SymPoly::term(m, k3fib::Rational(1));
}

void straighten_hyperelliptic(benchmark::State& state) {
  const k3fib::FibreType fibre = hyperelliptic();
  const k3fib::SymPoly word =
      random_word(static_cast<int>(state.range(0)), 5, 0xabcdu);
  for (auto _ : state) {
    k3fib::SymPoly nf = k3fib::normal_form(word, fibre);
    benchmark::DoNotOptimize(nf);
  }
}

void straighten_unigonal(benchmark::State& state) {
  const k3fib::FibreType fibre = unigonal();
  const k3fib::SymPoly word =
      random_word(static_cast<int>(state.range(0)), 6, 0xabcdu);
  for (auto _ : state) {
    k3fib::SymPoly nf = k3fib::normal_form(word, fibre);
    benchmark::DoNotOptimize(nf);
  }
}

}  // namespace

BENCHMARK(straighten_hyperelliptic)->DenseRange(2, 10, 2);
BENCHMARK(straighten_unigonal)->DenseRange(2, 10, 2);

BENCHMARK_MAIN();
