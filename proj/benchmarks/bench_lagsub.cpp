#include <benchmark/benchmark.h>

#include "lagsub/dbl/double.hpp"
#include "lagsub/dbl/rmatrix.hpp"
#include "lagsub/geom/geom.hpp"
#include "lagsub/lagrange/catalog.hpp"

using namespace lagsub;

namespace {

exact::Matrix hilbert(std::size_t n) {
  exact::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = exact::Scalar(mpq_class(1, static_cast<long>(i + j + 1)));
  }
  return m;
}

void BM_Rank(benchmark::State& state) {
  const auto m = hilbert(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact::rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

void BM_ManinCheck(benchmark::State& state, const char* type) {
  const lie::LieAlgebra g{roots::RootSystem(type)};
  for (auto _ : state) benchmark::DoNotOptimize(dbl::manin_triple_check(g).passed());
}
BENCHMARK_CAPTURE(BM_ManinCheck, A2, "A2");
BENCHMARK_CAPTURE(BM_ManinCheck, B2, "B2");

void BM_Cybe(benchmark::State& state, const char* type) {
  const lie::LieAlgebra g{roots::RootSystem(type)};
  const auto r = dbl::sklyanin_r(g);
  for (auto _ : state) benchmark::DoNotOptimize(dbl::cybe_residual(g, r.r).is_zero());
}
BENCHMARK_CAPTURE(BM_Cybe, A2, "A2");

void BM_Catalog(benchmark::State& state, const char* type) {
  const lie::LieAlgebra g{roots::RootSystem(type)};
  for (auto _ : state) benchmark::DoNotOptimize(lagrange::enumerate_orbit_labels(g).labels.size());
}
BENCHMARK_CAPTURE(BM_Catalog, A1, "A1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Catalog, A2, "A2")->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Jacobiator(benchmark::State& state) {
  const lie::LieAlgebra g{roots::RootSystem("A1")};
  const geom::PoissonX x(g);
  const auto panel = geom::coordinate_panel(g);
  const geom::CMatrix p = geom::exp_ad(x, {{0.1, 0.2}, {-0.3, 0.1}, {0.2, -0.2}});
  for (auto _ : state) benchmark::DoNotOptimize(x.jacobiator(panel[0], panel[1], panel[3], p));
}
BENCHMARK(BM_Jacobiator);

}  // namespace

BENCHMARK_MAIN();
