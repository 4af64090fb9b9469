#include <benchmark/benchmark.h>

#include <random>

#include "setmeter/cover.hpp"
#include "setmeter/set_model.hpp"

namespace {

using namespace setmeter;

FinitePoints uniform_cloud(std::size_t n, int dim) {
  std::mt19937_64 rng(12345);
  std::vector<Point> pts;
  pts.reserve(n);
  const BigInt den = BigInt(1) << 30;
  for (std::size_t i = 0; i < n; ++i) {
    Point p;
    p.reserve(dim);
    for (int c = 0; c < dim; ++c) {
      p.emplace_back(Rational(BigInt(rng() & ((1u << 30) - 1)), den));
    }
    pts.push_back(std::move(p));
  }
  return FinitePoints(dim, std::move(pts));
}

void BM_GridCoverPoints(benchmark::State& state) {
  const SetModel cloud(uniform_cloud(static_cast<std::size_t>(state.range(0)), 2));
  const Rational r(1, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_cover(cloud, r).count());
  }
}
BENCHMARK(BM_GridCoverPoints)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_GridCoverWorkers(benchmark::State& state) {
  const SetModel cloud(uniform_cloud(100000, 2));
  const Rational r(1, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        grid_cover(cloud, r, static_cast<int>(state.range(0))).count());
  }
}
BENCHMARK(BM_GridCoverWorkers)->Arg(1)->Arg(2)->Arg(4);

void BM_IfsCount(benchmark::State& state) {
  const SetModel cantor = ifs_preset("cantor");
  const unsigned k = static_cast<unsigned>(state.range(0));
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r /= 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_size(cantor, r));
  }
}
BENCHMARK(BM_IfsCount)->Arg(5)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
