#include <benchmark/benchmark.h>

#include "ramsey/clique.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/stage.hpp"
#include "ramsey/verify.hpp"

namespace {

using namespace ramsey;

void BM_stage_profile(benchmark::State& state) {
  ExponentStage stage = paper_chain().at(0);
  Rational lam(3, 10);
  for (auto _ : state) {
    StageProfile prof = stage_profile(stage, lam, 128);
    benchmark::DoNotOptimize(prof);
  }
}
BENCHMARK(BM_stage_profile);

void BM_enclose_psi_interval(benchmark::State& state) {
  ExponentStage stage = paper_chain().at(0);
  Interval lam = Interval::of(Rational(1, 4), Rational(3, 10), 128);
  for (auto _ : state) {
    Interval psi = enclose_psi(stage, lam, 128);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_enclose_psi_interval);

void BM_enclose_psi_prime(benchmark::State& state) {
  ExponentStage stage = paper_chain().at(0);
  Interval lam = Interval::of(Rational(1, 100), Rational(11, 1000), 128);
  for (auto _ : state) {
    Interval d = enclose_psi_prime(stage, lam, 128);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_enclose_psi_prime);

void BM_inequality_suite(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Coloring col = Coloring::random(n, 1, 7, {0.6, 0.4});
  Candidate cand{VertexSet(n), VertexSet(n)};
  for (int i = 0; i < n; ++i) {
    if (i % 2 == 0) {
      cand.X.add(i);
    } else {
      cand.Y.add(i);
    }
  }
  Rational p(1, 2);
  for (auto _ : state) {
    InequalityReport rep = inequality_suite(col, cand, p);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_inequality_suite)->Arg(14)->Arg(28);

void BM_goodness_recursion(benchmark::State& state) {
  Coloring col = Coloring::random(28, 1, 3, {0.97, 0.03});
  Candidate cand{VertexSet(28), VertexSet(28)};
  for (int i = 0; i < 28; ++i) {
    if (i < 14) {
      cand.X.add(i);
    } else {
      cand.Y.add(i);
    }
  }
  Rational p(1, 2), x = golden_x_below(p);
  for (auto _ : state) {
    Witness w = recurse_good(col, cand, 2, 2, 2, p, x);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_goodness_recursion);

void BM_ramsey_exact_33(benchmark::State& state) {
  for (auto _ : state) {
    RamseyExactResult r = ramsey_exact(3, MulticolorTarget{{3}}, 10);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ramsey_exact_33);

}  // namespace

BENCHMARK_MAIN();
