#include <benchmark/benchmark.h>

#include "contring/ball.hpp"
#include "contring/canonical.hpp"
#include "contring/classes.hpp"
#include "contring/geodesic.hpp"
#include "contring/linalg.hpp"
#include "contring/random.hpp"

using namespace contring;

static void BM_Rank(benchmark::State& state) {
  const Field k(3);
  Rng rng(1);
  const Mat a = random_mat(rng, k, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(32)->Arg(128);

static void BM_Charpoly(benchmark::State& state) {
  const Field k(5);
  Rng rng(2);
  const Mat a = random_mat(rng, k, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(a));
}
BENCHMARK(BM_Charpoly)->Arg(4)->Arg(6)->Arg(16)->Arg(32);

static void BM_Rcf(benchmark::State& state) {
  const Field k(3);
  Rng rng(3);
  const Mat a = random_mat(rng, k, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rcf(a));
}
BENCHMARK(BM_Rcf)->Arg(5)->Arg(10)->Arg(20);

static void BM_GeodesicUnit(benchmark::State& state) {
  const Field k(5);
  Rng rng(4);
  const Mat a = random_split_unit(rng, k, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_unit_to_identity(a));
}
BENCHMARK(BM_GeodesicUnit)->Arg(8)->Arg(16);

static void BM_BallFactorization(benchmark::State& state) {
  const Field k(3);
  Rng rng(5);
  const Mat g = random_upper_unit(rng, k, 16);
  for (auto _ : state) benchmark::DoNotOptimize(ball_factorization(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BallFactorization)->Arg(2)->Arg(4)->Arg(16);

static void BM_ClassTable(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ClassTable::enumerate(3, p, true));
}
BENCHMARK(BM_ClassTable)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ClassProduct(benchmark::State& state) {
  const auto table = ClassTable::enumerate(3, 3, true);
  std::vector<std::size_t> tuple;
  for (const auto& c : table.classes())
    if (c.ind == 2) tuple.push_back(c.id);
  tuple.resize(std::min<std::size_t>(tuple.size(), 7));
  for (auto _ : state) benchmark::DoNotOptimize(class_product_closure(table, tuple));
}
BENCHMARK(BM_ClassProduct)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
