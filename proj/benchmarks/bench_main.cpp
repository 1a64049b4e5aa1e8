#include <benchmark/benchmark.h>

#include <random>

#include "engelkit/decomp.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/links.hpp"
#include "engelkit/magnus.hpp"
#include "engelkit/zlattice.hpp"

namespace {

using namespace engelkit;

Word random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n);
  std::vector<Letter> letters;
  for (int i = 0; i < len; ++i) letters.push_back({gen(rng), rng() % 2 ? 1 : -1});
  return Word::from_letters(letters);
}

void BM_Expand(benchmark::State& state) {
  std::mt19937_64 rng(42);
  Word w = random_word(rng, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand(w, 4));
}
BENCHMARK(BM_Expand)->Arg(12)->Arg(24)->Arg(48);

void BM_ReducedExpand(benchmark::State& state) {
  std::mt19937_64 rng(43);
  Word w = random_word(rng, 8, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_expand(w, 8));
}
BENCHMARK(BM_ReducedExpand)->Arg(12)->Arg(24)->Arg(48);

void BM_Hnf(benchmark::State& state) {
  std::mt19937_64 rng(44);
  int n = static_cast<int>(state.range(0));
  IntMatrix a(n, n);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a.at(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(a));
}
BENCHMARK(BM_Hnf)->Arg(6)->Arg(12);

void BM_Snf(benchmark::State& state) {
  std::mt19937_64 rng(45);
  int n = static_cast<int>(state.range(0));
  IntMatrix a(n, n);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a.at(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf)->Arg(6)->Arg(12);

void BM_ClassifyWhitehead(benchmark::State& state) {
  LinkModel wh = build("wh(+)");
  for (auto _ : state) benchmark::DoNotOptimize(classify(wh));
}
BENCHMARK(BM_ClassifyWhitehead);

void BM_ClassifyBingWh(benchmark::State& state) {
  LinkModel l = build("bing(bing(wh(+),1),3)");
  for (auto _ : state) benchmark::DoNotOptimize(classify(l));
}
BENCHMARK(BM_ClassifyBingWh);

void BM_DecomposeGamma(benchmark::State& state) {
  Word gamma = attach_curve_word({1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(decompose_gamma(gamma, 4));
}
BENCHMARK(BM_DecomposeGamma);

void BM_CertifyClass3(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_class3(n, 2));
}
BENCHMARK(BM_CertifyClass3)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
