#include <benchmark/benchmark.h>

#include "expvote/asymptotics.hpp"
#include "expvote/equilibrium.hpp"
#include "expvote/simulate.hpp"
#include "expvote/stats.hpp"

namespace {

expvote::ModelParams params() { return {0.6, 0.8, 0.2, 1.0, 0.1, 1.0, 2.0}; }

void BM_Beliefs(benchmark::State& state) {
  const auto p = params();
  const int n = static_cast<int>(state.range(0));
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expvote::p_good_given_winners(p, n, n / 2, t));
  }
}
BENCHMARK(BM_Beliefs)->Arg(10)->Arg(1000)->Arg(100000);

void BM_SolveCutoff(benchmark::State& state) {
  const auto p = params();
  const expvote::QuorumRule rule{0.5, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(expvote::solve_cutoff(p, rule));
  }
}
BENCHMARK(BM_SolveCutoff)->Arg(2)->Arg(100)->Arg(10000);

void BM_LimitCutoff(benchmark::State& state) {
  const auto p = params();
  double k = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expvote::limit_cutoff(p, k));
    k = k < 0.9 ? k + 1e-4 : 0.2;
  }
}
BENCHMARK(BM_LimitCutoff);

void BM_BinomialTail(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expvote::binomial_tail_geq(n, 0.52, n / 2));
  }
}
BENCHMARK(BM_BinomialTail)->Arg(100)->Arg(2000);

void BM_EstimateAggregation(benchmark::State& state) {
  const auto p = params();
  const expvote::QuorumRule rule{0.3, static_cast<int>(state.range(0))};
  const double cutoff = expvote::limit_cutoff(p, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        expvote::estimate_aggregation(p, rule, cutoff, 200, 7, 1));
  }
}
BENCHMARK(BM_EstimateAggregation)->Arg(100)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
