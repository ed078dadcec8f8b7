// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "lta/directions.hpp"
#include "lta/kernels.hpp"
#include "lta/trainer.hpp"

namespace {

using namespace lta;

SolutionSet front(std::size_t m, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_front(FrontSpec{FrontShape::kTriangular, 1.0, m}, n, rng);
}

template <bool Parallel>
void BM_HvcAll(benchmark::State& state) {
  const auto set = front(3, static_cast<std::size_t>(state.range(0)), 1);
  const auto ref = ReferencePoint::uniform(3, 1.2);
  for (auto _ : state) {
    auto v = Parallel ? kernels::omp::hvc_all(set, ref) : kernels::serial::hvc_all(set, ref);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void BM_LengthColumn(benchmark::State& state) {
  const auto set = front(3, static_cast<std::size_t>(state.range(0)), 2);
  const auto ref = ReferencePoint::uniform(3, 1.2);
  Rng rng(3);
  const auto lambda = sample_unv(3, rng);
  std::vector<double> lengths(set.size()), powers(set.size());
  for (auto _ : state) {
    if (Parallel) {
      kernels::omp::length_column(set, lambda, ref, lengths, powers);
    } else {
      kernels::serial::length_column(set, lambda, ref, lengths, powers);
    }
    benchmark::DoNotOptimize(lengths.data());
  }
}

template <bool Parallel>
void BM_ScoreRemovals(benchmark::State& state) {
  const auto corpus = generate_corpus(3, static_cast<std::size_t>(state.range(0)), 50, 4);
  Rng rng(5);
  const auto dirs = gen_unv(3, 30, rng);
  std::vector<LengthMatrix> matrices;
  for (const auto& s : corpus.sets) matrices.emplace_back(s.solutions, s.ref, dirs);
  std::vector<kernels::ScoringTarget> targets;
  for (std::size_t i = 0; i < matrices.size(); ++i) targets.push_back({&matrices[i], corpus.sets[i].hvc});
  std::vector<double> table(targets.size() * dirs.size());
  for (auto _ : state) {
    if (Parallel) {
      kernels::omp::score_removals(targets, table);
    } else {
      kernels::serial::score_removals(targets, table);
    }
    benchmark::DoNotOptimize(table.data());
  }
}

template <bool Parallel>
void BM_GahssUpdate(benchmark::State& state) {
  const auto candidates = front(3, static_cast<std::size_t>(state.range(0)), 6);
  Rng rng(7);
  const auto dirs = gen_unv(3, 30, rng);
  std::vector<double> running(candidates.size() * dirs.size(), 1.0);
  std::vector<char> taken(candidates.size(), 0);
  taken[0] = 1;
  for (auto _ : state) {
    if (Parallel) {
      kernels::omp::gahss_update(candidates, dirs, candidates[0], taken, running);
    } else {
      kernels::serial::gahss_update(candidates, dirs, candidates[0], taken, running);
    }
    benchmark::DoNotOptimize(running.data());
  }
}

}  // namespace

BENCHMARK(BM_HvcAll<false>)->Arg(50)->Arg(100);
BENCHMARK(BM_HvcAll<true>)->Arg(50)->Arg(100);
BENCHMARK(BM_LengthColumn<false>)->Arg(1000)->Arg(10000);
BENCHMARK(BM_LengthColumn<true>)->Arg(1000)->Arg(10000);
BENCHMARK(BM_ScoreRemovals<false>)->Arg(10)->Arg(40);
BENCHMARK(BM_ScoreRemovals<true>)->Arg(10)->Arg(40);
BENCHMARK(BM_GahssUpdate<false>)->Arg(1000)->Arg(5000);
BENCHMARK(BM_GahssUpdate<true>)->Arg(1000)->Arg(5000);

BENCHMARK_MAIN();
