#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fuzzpart/histogram.hpp"
#include "fuzzpart/mf_dsl.hpp"
#include "fuzzpart/tensor.hpp"
#include "fuzzpart/verifier.hpp"

namespace {

using namespace fuzzpart;

TensorPartition make_partition(int d, bool cosine) {
  std::vector<Axis> axes(d, Axis{0.0, 1.0, 5});
  std::vector<NormalizedMF> mfs(d, cosine ? mf_cosine() : mf_triangular());
  return TensorPartition(axes, mfs);
}

std::vector<double> random_point(std::mt19937_64& rng, int d, double lo,
                                 double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> x(d);
  for (double& v : x) v = dist(rng);
  return x;
}

void BM_Centralized(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const TensorPartition tp = make_partition(d, false);
  std::mt19937_64 rng(1);
  const auto x = random_point(rng, d, -0.9, 0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tp.centralized(x));
  }
}
BENCHMARK(BM_Centralized)->Arg(1)->Arg(2)->Arg(4);

void BM_CornerSum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const TensorPartition tp = make_partition(d, true);
  std::mt19937_64 rng(2);
  const auto x = random_point(rng, d, 0.1, 3.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tp.corner_sum(x));
  }
}
BENCHMARK(BM_CornerSum)->Arg(1)->Arg(2)->Arg(3);

void BM_AccumulateFuzzy(benchmark::State& state) {
  const TensorPartition tp = make_partition(2, false);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 4.0);
  Dataset data;
  data.width = 2;
  data.values.resize(2 * 10000);
  for (double& v : data.values) v = dist(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(accumulate_fuzzy(tp, data));
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_AccumulateFuzzy);

void BM_VerifyDefinition2(benchmark::State& state) {
  const TensorPartition tp = make_partition(2, true);
  const CentralizedMembership mu = centralized_of(tp);
  const std::vector<double> spacings = {1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_definition2(mu, spacings));
  }
}
BENCHMARK(BM_VerifyDefinition2);

void BM_ParseCompile(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsl::compile_mf("(cos(pi*x)+1)/2"));
  }
}
BENCHMARK(BM_ParseCompile);

}  // namespace

BENCHMARK_MAIN();
