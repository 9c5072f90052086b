#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "adeweyl/cartan.hpp"
#include "adeweyl/chars.hpp"
#include "adeweyl/fermionic.hpp"
#include "adeweyl/laurent.hpp"
#include "adeweyl/quiver.hpp"
#include "adeweyl/type_a.hpp"
#include "adeweyl/weylmod.hpp"

namespace {

using namespace adeweyl;

void BM_GaussBinomial(benchmark::State& state) {
  const int64_t a = state.range(0);
  for (auto _ : state) {
    for (int64_t b = 0; b <= a; ++b) {
      benchmark::DoNotOptimize(gauss_binomial(a, b));
    }
  }
}
BENCHMARK(BM_GaussBinomial)->Arg(12)->Arg(24)->Arg(48);

void BM_DominantCharacter(benchmark::State& state) {
  CartanDatum d4(Series::D, 4);
  Weight lambda({2, 1, 0, 0});
  for (auto _ : state) {
    CharacterCache fresh;
    ComputeOptions opts;
    opts.cache = &fresh;
    benchmark::DoNotOptimize(dominant_character(d4, lambda, opts));
  }
}
BENCHMARK(BM_DominantCharacter);

void BM_DominantCharacterE6(benchmark::State& state) {
  CartanDatum e6(Series::E, 6);
  Weight lambda({1, 1, 0, 0, 0, 0});
  for (auto _ : state) {
    CharacterCache fresh;
    ComputeOptions opts;
    opts.cache = &fresh;
    benchmark::DoNotOptimize(dominant_character(e6, lambda, opts));
  }
}
BENCHMARK(BM_DominantCharacterE6);

void BM_FermionicForm(benchmark::State& state) {
  const int64_t m = state.range(0);
  CartanDatum a2(Series::A, 2);
  Weight lambda({m, m});
  Weight mu({0, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(fermionic_M(a2, lambda, mu));
  }
}
BENCHMARK(BM_FermionicForm)->Arg(2)->Arg(3)->Arg(4);

void BM_GradedCharacter(benchmark::State& state) {
  CartanDatum a3(Series::A, 3);
  Weight lambda({1, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(graded_character(a3, lambda));
  }
}
BENCHMARK(BM_GradedCharacter);

void BM_ChariLoktev(benchmark::State& state) {
  CartanDatum a3(Series::A, 3);
  Weight lambda({2, 1, 1});
  RootElem alpha({2, 2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(chari_loktev_polynomial(a3, alpha, lambda));
  }
}
BENCHMARK(BM_ChariLoktev);

void BM_BettiSweep(benchmark::State& state) {
  CartanDatum a2(Series::A, 2);
  Weight lambda({2, 2});
  GradedCharacter gch = graded_character(a2, lambda);
  std::vector<RootElem> alphas;
  for (const Weight& nu : all_weights(a2, lambda)) {
    alphas.push_back(*a2.to_root_element(lambda - nu));
  }
  for (auto _ : state) {
    for (const RootElem& alpha : alphas) {
      benchmark::DoNotOptimize(betti(a2, alpha, gch));
    }
  }
}
BENCHMARK(BM_BettiSweep);

}  // namespace

BENCHMARK_MAIN();
