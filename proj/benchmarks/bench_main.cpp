#include <benchmark/benchmark.h>

#include "starban/bancat.hpp"
#include "starban/convolution.hpp"
#include "starban/rng.hpp"
#include "starban/spaces.hpp"
#include "starban/starcomp.hpp"
#include "starban/svd.hpp"
#include "starban/tensornorms.hpp"

namespace {

using starban::num::Matrix;
using starban::num::Rng;

void BM_Svd(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const Matrix m = starban::num::random_matrix(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(starban::num::svd(m));
  }
}
BENCHMARK(BM_Svd)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ProjectiveCertificate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto t = starban::tensornorms::make_element(
      starban::num::random_matrix(rng, n, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(starban::tensornorms::projective_norm(t));
  }
}
BENCHMARK(BM_ProjectiveCertificate)->Arg(2)->Arg(4)->Arg(8);

void BM_OperatorNormClimb(benchmark::State& state) {
  const auto dom = starban::spaces::parse_space("sum1(l2(2),l2(2),l2(2))");
  const auto cod = starban::spaces::parse_space("sup(l2(2),l2(2),l2(2))");
  Rng rng(3);
  const Matrix m = starban::num::random_matrix(rng, 6, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        starban::spaces::operator_norm_estimate(m, dom, cod, 16, 0));
  }
}
BENCHMARK(BM_OperatorNormClimb);

void BM_BilinearNormRoutes(benchmark::State& state) {
  const auto a = starban::spaces::l2(3);
  const auto b = starban::spaces::l2(3);
  const auto c = starban::spaces::l2(3);
  Rng rng(4);
  const Matrix f = starban::num::random_matrix(rng, 3, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        starban::bancat::bilinear_norm_both_routes(a, b, c, f, 8, 0));
  }
}
BENCHMARK(BM_BilinearNormRoutes);

void BM_CompletionSuite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(starban::starcomp::law_suite_completion(5));
  }
}
BENCHMARK(BM_CompletionSuite);

void BM_Convolve(benchmark::State& state) {
  const auto profile = state.range(0) == 0
                           ? starban::convolution::braid_profile()
                           : starban::convolution::symmetric_profile();
  starban::convolution::DimFunctor f;
  f.set(0, starban::starcomp::CompletedObj::fin(1));
  f.set(1, starban::starcomp::CompletedObj::fin(2));
  f.set(3, starban::starcomp::CompletedObj::fin(4));
  starban::convolution::DimFunctor g;
  g.set(1, starban::starcomp::CompletedObj::fin(1));
  g.set(2, starban::starcomp::CompletedObj::fin(3));
  g.set(4, starban::starcomp::CompletedObj::fin(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(starban::convolution::convolve(f, g, profile));
  }
}
BENCHMARK(BM_Convolve)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
