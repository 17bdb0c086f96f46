#include <benchmark/benchmark.h>

#include <random>

#include "torq/cone.hpp"
#include "torq/quotient.hpp"
#include "torq/smith.hpp"
#include "torq/strata.hpp"

namespace {

using namespace torq;

WeightSystem random_system(std::mt19937& rng, int r, int k) {
  std::uniform_int_distribution<int> entry(-3, 3);
  WeightSystem ws;
  ws.rank = r;
  for (int i = 0; i < k; ++i) {
    WeightSlot s;
    for (int j = 0; j < r; ++j) s.mu.push_back(entry(rng));
    ws.slots.push_back(std::move(s));
  }
  for (int j = 0; j < r; ++j) ws.nu.push_back(Rat(entry(rng)));
  return ws;
}

void BM_cone_member(benchmark::State& state) {
  std::mt19937 rng(7);
  int r = static_cast<int>(state.range(0));
  std::vector<std::pair<std::vector<RatVec>, RatVec>> cases;
  for (int i = 0; i < 64; ++i) {
    WeightSystem ws = random_system(rng, r, 2 * r + 2);
    std::vector<RatVec> gens;
    for (int j = 0; j < ws.count(); ++j) gens.push_back(ws.weight(j));
    cases.emplace_back(std::move(gens), ws.nu);
  }
  size_t i = 0;
  for (auto _ : state) {
    const auto& [gens, nu] = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(cone_member(gens, nu).member);
  }
}
BENCHMARK(BM_cone_member)->Arg(2)->Arg(4)->Arg(6);

void BM_snf(benchmark::State& state) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  int n = static_cast<int>(state.range(0));
  std::vector<IntMat> mats;
  for (int c = 0; c < 32; ++c) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    mats.push_back(std::move(m));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snf(mats[i++ % mats.size()]).factors);
  }
}
BENCHMARK(BM_snf)->Arg(3)->Arg(5)->Arg(8);

void BM_chamber_scan(benchmark::State& state) {
  WeightSystem ws;
  ws.rank = 2;
  ws.slots = {{{1, 0}}, {{1, 0}}, {{1, 1}}, {{0, 1}}, {{2, 1}}, {{1, 2}}, {{1, 3}}};
  ws.nu = {Rat(3), Rat(5)};  // off every wall of this arrangement
  for (auto _ : state) {
    benchmark::DoNotOptimize(chamber_signature(ws).size());
  }
}
BENCHMARK(BM_chamber_scan);

void BM_enumerate_types(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RatVec zero{Rat(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_types(n, {zero}, zero).size());
  }
}
BENCHMARK(BM_enumerate_types)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
