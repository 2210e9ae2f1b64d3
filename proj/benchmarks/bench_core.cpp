#include <benchmark/benchmark.h>

#include "sbcg/cgc.hpp"
#include "sbcg/isb.hpp"
#include "sbcg/oracle.hpp"
#include "sbcg/projector.hpp"

using namespace sbcg;

namespace {

// balanced two-family state with 4t quanta
OccState two_mode_state(int t) { return make_state({t, t}, {t, t}); }

void BM_ProjectTwoMode(benchmark::State& state)
{
  const int t = static_cast<int>(state.range(0));
  FockVector v = FockVector::monomial(two_mode_state(t));
  for (auto _ : state) {
    FockVector w = apply_P0(v, 2, Flavor::Su2);
    benchmark::DoNotOptimize(w.terms().size());
  }
}
BENCHMARK(BM_ProjectTwoMode)->DenseRange(1, 3);

void BM_ProjectThreeMode(benchmark::State& state)
{
  const int t = static_cast<int>(state.range(0));
  FockVector v = FockVector::monomial(make_state({t, t, 0}, {t, t, t}));
  for (auto _ : state) {
    FockVector w = apply_P0(v, 3, Flavor::SuN);
    benchmark::DoNotOptimize(w.terms().size());
  }
}
BENCHMARK(BM_ProjectThreeMode)->DenseRange(1, 2);

void BM_ClosedFormSweep(benchmark::State& state)
{
  const int jmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long rows = 0;
    for (int tj1 = 0; tj1 <= 2 * jmax; ++tj1)
      for (int tj2 = 0; tj2 <= 2 * jmax; ++tj2)
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
          for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
            int tm = tm1 + tm2;
            int lo = std::max(std::abs(tj1 - tj2), std::abs(tm));
            for (int tj = lo; tj <= tj1 + tj2; tj += 2) {
              SignedSqrtRational v = cgc_su2(SU2Coupling{tj1, tm1, tj2, tm2, tj});
              rows += v.sign();
            }
          }
    benchmark::DoNotOptimize(rows);
  }
  state.SetLabel("full table");
}
BENCHMARK(BM_ClosedFormSweep)->DenseRange(1, 3);

void BM_ProjectorRouteTwoMode(benchmark::State& state)
{
  SU2Coupling c{4, 0, 2, 0, 6};
  for (auto _ : state) {
    ProjectorCgc p = cgc_via_projector(c);
    benchmark::DoNotOptimize(p.value.sign());
  }
}
BENCHMARK(BM_ProjectorRouteTwoMode);

void BM_ProjectorRouteThreeMode(benchmark::State& state)
{
  SUNCoupling c{3, {1, 0, 0}, {1, 1, 0}, 0};
  for (auto _ : state) {
    ProjectorCgc p = cgc_via_projector(c);
    benchmark::DoNotOptimize(p.value.sign());
  }
}
BENCHMARK(BM_ProjectorRouteThreeMode);

void BM_SingleSumForm(benchmark::State& state)
{
  SU2Coupling c{4, 0, 2, 0, 6};
  for (auto _ : state) {
    SignedSqrtRational v = racah_cgc(c);
    benchmark::DoNotOptimize(v.sign());
  }
}
BENCHMARK(BM_SingleSumForm);

void BM_SymmetricStateBuild(benchmark::State& state)
{
  const int t = static_cast<int>(state.range(0));
  OccState labels = make_state({t, t}, {t - 1, t - 1});
  for (auto _ : state) {
    SymmetricState s = build_symmetric_state(labels, Flavor::Su2);
    benchmark::DoNotOptimize(s.state.terms().size());
  }
}
BENCHMARK(BM_SymmetricStateBuild)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
