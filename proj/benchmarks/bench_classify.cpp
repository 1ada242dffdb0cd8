#include <benchmark/benchmark.h>

#include "toric/complex.hpp"
#include "toric/cox.hpp"
#include "toric/generators.hpp"

using namespace toric;

namespace {

Fan cp_power(std::size_t factor_dim, std::size_t count) {
  Fan f = projective_space(factor_dim);
  for (std::size_t i = 1; i < count; ++i) f = product(f, projective_space(factor_dim));
  return f;
}

void BM_validate(benchmark::State& state) {
  Fan f = cp_power(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ValidatedFan::validate(f));
  }
}
BENCHMARK(BM_validate)->Arg(1)->Arg(2)->Arg(3);

void BM_classify(benchmark::State& state) {
  ValidatedFan vf =
      ValidatedFan::validate(cp_power(1, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(vf));
  }
}
BENCHMARK(BM_classify)->Arg(2)->Arg(4)->Arg(6);

void BM_quotient(benchmark::State& state) {
  ValidatedFan vf =
      ValidatedFan::validate(cp_power(2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_presentation(vf));
  }
}
BENCHMARK(BM_quotient)->Arg(1)->Arg(2)->Arg(3);

}  // namespace
