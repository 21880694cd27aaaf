#include <benchmark/benchmark.h>

#include "trilie/analysis.hpp"
#include "trilie/manin.hpp"
#include "trilie/representation.hpp"

using namespace trilie;

namespace {

ThreeLieAlgebra worked_example() {
  ThreeLieAlgebra a(4);
  a.set_bracket(1, 2, 3, unit_vec(4, 0));
  a.set_bracket(0, 2, 3, unit_vec(4, 1));
  return a;
}

InvolutiveDerivation worked_grading(const ThreeLieAlgebra& a) {
  Vec d(4, Rational(1));
  d[3] = Rational(-1);
  return InvolutiveDerivation::eigen_split(a, Mat::diagonal(d));
}

const ThreeLieAlgebra& total_algebra() {
  static const ThreeLieAlgebra total = [] {
    ThreeLieAlgebra a = worked_example();
    return build_manin(a, worked_grading(a)).total;
  }();
  return total;
}

}  // namespace

static void BM_FundamentalIdentity16(benchmark::State& state) {
  const ThreeLieAlgebra& total = total_algebra();
  for (auto _ : state) {
    FiReport r = total.check_fundamental_identity();
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_FundamentalIdentity16)->Unit(benchmark::kMillisecond);

static void BM_BuildPipeline(benchmark::State& state) {
  ThreeLieAlgebra a = worked_example();
  InvolutiveDerivation g = worked_grading(a);
  for (auto _ : state) {
    PipelineOptions opts;
    opts.verify_total_fi = false;  // isolate construction from the identity scan
    ManinPipeline p = run_pipeline(a, g, opts);
    benchmark::DoNotOptimize(p.triple.total.dim());
  }
}
BENCHMARK(BM_BuildPipeline)->Unit(benchmark::kMillisecond);

static void BM_MatchedPair(benchmark::State& state) {
  ThreeLieAlgebra a = worked_example();
  InvolutiveDerivation g = worked_grading(a);
  SemidirectTables t = semidirect_closed_forms(a, g);
  for (auto _ : state) {
    MatchedPairReport r = check_matched_pair(t.b1, t.b2, t.adelta, t.apsi);
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_MatchedPair)->Unit(benchmark::kMillisecond);

static void BM_DerivedSeries16(benchmark::State& state) {
  const ThreeLieAlgebra& total = total_algebra();
  for (auto _ : state) {
    SeriesReport r = derived_series(total);
    benchmark::DoNotOptimize(r.index);
  }
}
BENCHMARK(BM_DerivedSeries16)->Unit(benchmark::kMillisecond);

static void BM_Rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Mat m(n, n);
  long v = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m(r, c) = Rational((v * 37 % 23) - 11, 1 + v % 7);
      ++v;
    }
  for (auto _ : state) {
    RrefResult rr = rref(m);
    benchmark::DoNotOptimize(rr.pivots.size());
  }
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
