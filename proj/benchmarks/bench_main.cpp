#include <benchmark/benchmark.h>

#include "fuzznorm/decomposition.hpp"
#include "fuzznorm/fuzzy_norm.hpp"
#include "fuzznorm/verification.hpp"

using namespace fuzznorm;

namespace {

FuzzyNorm make_norm(int dim) { return norm_from_generator(Generator::standard(dim)); }

void BM_eval_norm(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const FuzzyNorm N = make_norm(dim);
  CheckConfig cfg = CheckConfig::defaults();
  const auto xs = sample_vectors(dim, 64, cfg);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(N.eval(xs[i % xs.size()], 2.5));
    ++i;
  }
}
BENCHMARK(BM_eval_norm)->Arg(1)->Arg(3)->Arg(16);

void BM_alpha_cut(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const FuzzyNorm N = make_norm(dim);
  CheckConfig cfg = CheckConfig::defaults();
  const auto xs = sample_vectors(dim, 64, cfg);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_cut(N, xs[i % xs.size()], 0.5));
    ++i;
  }
}
BENCHMARK(BM_alpha_cut)->Arg(1)->Arg(3)->Arg(16);

void BM_decompose_table(benchmark::State& state) {
  const FuzzyNorm N = make_norm(2);
  CheckConfig cfg = CheckConfig::defaults();
  const auto xs = sample_vectors(2, 16, cfg);
  std::vector<double> alphas;
  for (int i = 1; i <= 19; ++i) alphas.push_back(i * 0.05);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_table(N, alphas, xs));
  }
}
BENCHMARK(BM_decompose_table);

}  // namespace

BENCHMARK_MAIN();
