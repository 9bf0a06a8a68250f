#include <benchmark/benchmark.h>

#include <random>

#include "cubedist/automorphism.hpp"
#include "cubedist/complex.hpp"
#include "cubedist/distortion.hpp"
#include "cubedist/presentation.hpp"
#include "cubedist/stallings.hpp"
#include "cubedist/wise.hpp"

using namespace cubedist;

static void BM_Sigma(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Word s = sigma(m);
    benchmark::DoNotOptimize(check_no_repeat(s));
  }
  state.SetItemsProcessed(state.iterations() * m * m);
}
BENCHMARK(BM_Sigma)->RangeMultiplier(4)->Range(16, 1024);

static void BM_FoldRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Word> words;
  for (int i = 0; i < state.range(0); ++i) {
    Word w;
    for (int j = 0; j < 20; ++j) w.push_back(Letter{static_cast<GenId>(rng() % 4), static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
    words.push_back(reduce(w));
  }
  for (auto _ : state) benchmark::DoNotOptimize(build_subgroup(words).rank());
}
BENCHMARK(BM_FoldRandom)->RangeMultiplier(4)->Range(4, 1024);

static void BM_InjectivityQ2(benchmark::State& state) {
  Presentation q = build_Q_diagonal(2, false);
  GenId a1 = q.alphabet.id("A1");
  std::vector<Word> u;
  for (const auto& r : conj_rules(q))
    if (r.stable == a1) u.push_back(r.image);
  for (auto _ : state) benchmark::DoNotOptimize(check_injective(u, u.size()).ok);
}
BENCHMARK(BM_InjectivityQ2);

static void BM_ConjExpandP(benchmark::State& state) {
  Presentation p = build_P(1);
  RuleTable rules(p);
  Word conj(static_cast<std::size_t>(state.range(0)), pos(p.alphabet.id("t1")));
  GenId a1 = p.alphabet.id("a1");
  for (auto _ : state) benchmark::DoNotOptimize(conj_expand(rules, conj, a1).length());
}
BENCHMARK(BM_ConjExpandP)->RangeMultiplier(4)->Range(4, 256);

static void BM_RewriteSmallP(benchmark::State& state) {
  Presentation p = build_P(1);
  const int k = static_cast<int>(state.range(0));
  Word w(static_cast<std::size_t>(k), pos(p.alphabet.id("t1")));
  w.push_back(pos(p.alphabet.id("a1")));
  w.insert(w.end(), static_cast<std::size_t>(k), neg(p.alphabet.id("t1")));
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_small(p, w).size());
}
BENCHMARK(BM_RewriteSmallP)->DenseRange(1, 5);

static void BM_ApplyIter(benchmark::State& state) {
  Automorphism a = phi(4, 4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apply_iter(a, pos(7), n).size());
}
BENCHMARK(BM_ApplyIter)->RangeMultiplier(2)->Range(4, 32);

static void BM_LargeLinkP(benchmark::State& state) {
  SquareComplex c = build_complex(build_P(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_large_link(c).ok);
  state.counters["squares"] = static_cast<double>(c.squares().size());
}
BENCHMARK(BM_LargeLinkP)->DenseRange(1, 3);

static void BM_LargeLinkQ2(benchmark::State& state) {
  SquareComplex c = build_complex(build_Q(2, false));
  for (auto _ : state) benchmark::DoNotOptimize(check_large_link(c).ok);
}
BENCHMARK(BM_LargeLinkQ2);

static void BM_BuildHnnComplex(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_complex(build_hnn(81, 729)).squares().size());
}
BENCHMARK(BM_BuildHnnComplex)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
