#include "chev/chevalley.hpp"
#include "chev/congruence.hpp"
#include "chev/rgdcheck.hpp"
#include "chev/torsion.hpp"

#include <benchmark/benchmark.h>

using namespace chev;

namespace {

const char kTypes[] = {'A', 'B', 'G', 'D'};
const int kRanks[] = {2, 2, 2, 4};

void BM_BuildBasis(benchmark::State& state) {
  auto i = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ChevalleyBasis cb = ChevalleyBasis::build(kTypes[i], kRanks[i]);
    benchmark::DoNotOptimize(cb.dim());
  }
  state.SetLabel(std::string(1, kTypes[i]) + std::to_string(kRanks[i]));
}
BENCHMARK(BM_BuildBasis)->DenseRange(0, 3);

void BM_RootElement(benchmark::State& state) {
  ChevalleyBasis cb = ChevalleyBasis::build('G', 2);
  Rational l = make_rational(-7, 12);
  RootId a = cb.roots().simple(1);
  for (auto _ : state) benchmark::DoNotOptimize(cb.x(a, l));
}
BENCHMARK(BM_RootElement);

void BM_TorsionOrderFinite(benchmark::State& state) {
  ChevalleyBasis cb = ChevalleyBasis::build('D', 4);
  GroupElement g = cb.lift_word(coxeter_element(cb.roots()).word()) * cb.h(0, Rational(3));
  for (auto _ : state) benchmark::DoNotOptimize(torsion_order(g.matrix()));
}
BENCHMARK(BM_TorsionOrderFinite);

void BM_TorsionOrderInfinite(benchmark::State& state) {
  ChevalleyBasis cb = ChevalleyBasis::build('A', 3);
  GroupElement g = cb.x(0, Rational(3)) * cb.x(cb.roots().size() - 1, Rational(6));
  for (auto _ : state) benchmark::DoNotOptimize(torsion_order(g.matrix()));
}
BENCHMARK(BM_TorsionOrderInfinite);

void BM_CheckVrgd(benchmark::State& state) {
  ChevalleyBasis cb = ChevalleyBasis::build('A', 2);
  RootGroupValuation rgv(cb, Valuation(2));
  for (auto _ : state) benchmark::DoNotOptimize(check_vrgd(rgv, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_CheckVrgd)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ApproximateGenerator(benchmark::State& state) {
  ChevalleyBasis cb = ChevalleyBasis::build('A', 2);
  CongruenceContext ctx(cb, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(approximate_generator(ctx, 0, make_rational(5, 16), 10));
}
BENCHMARK(BM_ApproximateGenerator);

}  // namespace

BENCHMARK_MAIN();
