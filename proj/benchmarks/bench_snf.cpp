#include <benchmark/benchmark.h>

#include <random>

#include "toric/lattice.hpp"

using namespace toric;

namespace {

IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
  return m;
}

void BM_smith_normal_form(benchmark::State& state) {
  std::mt19937_64 rng(7);
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(random_matrix(n, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(inputs[k++ % inputs.size()]));
  }
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(8)->Arg(12);

void BM_determinant(benchmark::State& state) {
  std::mt19937_64 rng(11);
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(random_matrix(n, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinant(inputs[k++ % inputs.size()]));
  }
}
BENCHMARK(BM_determinant)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
