// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "nsphere/kernels.hpp"
#include "nsphere/weingarten.hpp"

using namespace nsphere;

namespace {

template <class Fn>
void gram_case(benchmark::State& state, Fn fn) {
  const auto basis = enumerate_pairings(static_cast<std::size_t>(state.range(0)), PairingCategory::classical);
  for (auto _ : state) benchmark::DoNotOptimize(fn(basis, 7));
  state.SetItemsProcessed(static_cast<long>(state.iterations() * basis.size() * basis.size()));
}

void BM_GramSerial(benchmark::State& s) { gram_case(s, kernels::serial::gram); }
void BM_GramOmp(benchmark::State& s) { gram_case(s, kernels::omp::gram); }

template <class Fn>
void word_gram_case(benchmark::State& state, Fn fn) {
  const int n = static_cast<int>(state.range(0));
  const auto words = words_up_to(n, 3);
  const auto& engine = default_engine();
  auto f = [&](const Word& w) { return engine.integrate_word(w, n, PairingCategory::free); };
  fn(words, words, Word{}, f);  // warm the table cache
  for (auto _ : state) benchmark::DoNotOptimize(fn(words, words, Word{}, f));
}

void BM_WordGramSerial(benchmark::State& s) { word_gram_case(s, kernels::serial::word_gram); }
void BM_WordGramOmp(benchmark::State& s) { word_gram_case(s, kernels::omp::word_gram); }

template <class Fn>
void minors_case(benchmark::State& state, Fn fn) {
  const auto g = gram_matrix(static_cast<std::size_t>(state.range(0)), 5, PairingCategory::half);
  for (auto _ : state) benchmark::DoNotOptimize(fn(g));
}

void BM_MinorsSerial(benchmark::State& s) { minors_case(s, kernels::serial::leading_minors); }
void BM_MinorsOmp(benchmark::State& s) { minors_case(s, kernels::omp::leading_minors); }

}  // namespace

BENCHMARK(BM_GramSerial)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_GramOmp)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_WordGramSerial)->Arg(2)->Arg(3);
BENCHMARK(BM_WordGramOmp)->Arg(2)->Arg(3);
BENCHMARK(BM_MinorsSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_MinorsOmp)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
