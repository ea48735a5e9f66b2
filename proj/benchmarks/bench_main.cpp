#include <benchmark/benchmark.h>

#include <random>

#include "hankel/hankel_operator.hpp"
#include "hankel/identities.hpp"
#include "hankel/measure.hpp"
#include "hankel/spaces.hpp"
#include "hankel/test_functions.hpp"

using namespace hankel;

static void BM_MomentsPower(benchmark::State& st) {
  const Measure m = Measure::density(-0.5, 0.0);
  for (auto _ : st) benchmark::DoNotOptimize(moments_upto(m, st.range(0)));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_MomentsPower)->Range(1 << 10, 1 << 20);

static void BM_MomentsLogDensity(benchmark::State& st) {
  const Measure m = Measure::density(0.0, -1.0);
  for (auto _ : st) benchmark::DoNotOptimize(moments_upto(m, st.range(0)));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_MomentsLogDensity)->Range(1 << 10, 1 << 18);

static std::vector<double> random_coeffs(std::size_t n) {
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> a(n);
  for (auto& x : a) x = u(g);
  return a;
}

template <HankelMethod M>
static void BM_Hankel(benchmark::State& st) {
  const std::size_t K = st.range(0);
  const auto mt = moments_upto(Measure::lebesgue(), 2 * K + 1);
  const auto a = random_coeffs(K + 1);
  for (auto _ : st) benchmark::DoNotOptimize(hankel_correlate(mt.values, a, K, M));
}
BENCHMARK(BM_Hankel<HankelMethod::Direct>)->RangeMultiplier(4)->Range(256, 1 << 14);
BENCHMARK(BM_Hankel<HankelMethod::Fft>)->RangeMultiplier(4)->Range(256, 1 << 20);

static void BM_NormBergman(benchmark::State& st) {
  const double b = 1 - std::ldexp(1.0, -static_cast<int>(st.range(0)));
  const KernelTestFunction f(FamilySpec::bergman(4, 1), b, default_truncation(b));
  const auto poly = f.polynomial();
  for (auto _ : st) benchmark::DoNotOptimize(norm(poly, SpaceSpec::bergman(4, 1)));
}
BENCHMARK(BM_NormBergman)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_KernelQuadratureNorm(benchmark::State& st) {
  const double b = 1 - std::ldexp(1.0, -static_cast<int>(st.range(0)));
  const KernelTestFunction f(FamilySpec::h1(), b, default_truncation(b));
  for (auto _ : st) benchmark::DoNotOptimize(f.quadrature_norm(SpaceSpec::hardy(1)));
}
BENCHMARK(BM_KernelQuadratureNorm)->DenseRange(2, 10, 4)->Unit(benchmark::kMillisecond);

static void BM_DiscReproduce(benchmark::State& st) {
  const DiscRule rule;
  const auto h = TaylorPolynomial::from_real(random_coeffs(21));
  for (auto _ : st) benchmark::DoNotOptimize(bergman_reproduce_check(h, 0.9, rule));
}
BENCHMARK(BM_DiscReproduce);
BENCHMARK_MAIN();
