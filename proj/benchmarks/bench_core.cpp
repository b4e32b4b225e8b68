#include <benchmark/benchmark.h>

#include "btspin/alexander.hpp"
#include "btspin/group_model.hpp"
#include "btspin/homs.hpp"
#include "btspin/knot.hpp"
#include "btspin/smith.hpp"
#include "btspin/wirtinger.hpp"

using namespace btspin;

static void BM_AlexanderTorusBraid(benchmark::State& state) {
  const long long q = state.range(0);
  const KnotDiagram d = braid_to_diagram(torus_braid(3, q));
  const FinitePresentation w = wirtinger_presentation(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexander_polynomial(w));
  }
}
BENCHMARK(BM_AlexanderTorusBraid)->Arg(4)->Arg(5)->Arg(7);

static void BM_TietzeFigure8(benchmark::State& state) {
  const FinitePresentation w = wirtinger_presentation(*named_diagram("figure8"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tietze_simplify(w));
  }
}
BENCHMARK(BM_TietzeFigure8);

static void BM_CountHomsOrbifold(benchmark::State& state) {
  const FinitePresentation orb = tietze_simplify(
      orbifold_group(wirtinger_presentation(*named_diagram("figure8")), state.range(0)));
  const FiniteGroupTable& g = find_builtin("SL(2,Z3)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_homs(orb, g));
  }
}
BENCHMARK(BM_CountHomsOrbifold)->Arg(2)->Arg(3)->Arg(5);

static void BM_SmithAbelianization(benchmark::State& state) {
  const FinitePresentation spin = btspin_group(
      wirtinger_presentation(braid_to_diagram(torus_braid(3, 5))), MNPair{4, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(abelianization(spin));
  }
}
BENCHMARK(BM_SmithAbelianization);

static void BM_BranchedCoverOrder(benchmark::State& state) {
  const LaurentPoly delta = torus_alexander(3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(branched_cover_h1_order(delta, state.range(0)));
  }
}
BENCHMARK(BM_BranchedCoverOrder)->Arg(3)->Arg(7)->Arg(12);

BENCHMARK_MAIN();
