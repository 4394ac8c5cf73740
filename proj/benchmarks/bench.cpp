#include <benchmark/benchmark.h>

#include "fockh/estimates.hpp"
#include "fockh/fock.hpp"
#include "fockh/hankel.hpp"
#include "fockh/specfun.hpp"

namespace {

void BM_MittagLefflerSeries(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  // |lambda|^ell = 200: a heavy series without leaving double range.
  const fockh::Complex lambda = std::polar(std::pow(200.0, 1.0 / ell), 0.56);
  for (auto _ : state)
    benchmark::DoNotOptimize(fockh::specfun::mittag_leffler(ell, lambda));
}
BENCHMARK(BM_MittagLefflerSeries)->Arg(1)->Arg(2)->Arg(3);

void BM_KernelEval(benchmark::State& state) {
  const fockh::FockParams fp{1.0, static_cast<int>(state.range(0)), 2.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fockh::fock::kernel_eval({1.2, 0.7}, {0.9, -0.4}, fp));
}
BENCHMARK(BM_KernelEval)->Arg(1)->Arg(2)->Arg(3);

void BM_GammaSum(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fockh::estimates::gamma_sum(m, 3));
}
BENCHMARK(BM_GammaSum)->Arg(100)->Arg(1000)->Arg(4000);

void BM_HankelMatrix(benchmark::State& state) {
  const fockh::FockParams fp{1.0, 2, 2.0};
  std::vector<fockh::Complex> c(9, fockh::Complex{0.5, 0.25});
  const fockh::TaylorSymbol b(std::move(c));
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fockh::hankel::hankel_matrix(b, fp, n));
}
BENCHMARK(BM_HankelMatrix)->Arg(32)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
