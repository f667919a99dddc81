#include <benchmark/benchmark.h>

#include "oafrac/construct.hpp"
#include "oafrac/effects.hpp"
#include "oafrac/ring.hpp"
#include "oafrac/strength.hpp"
#include "oafrac/verify.hpp"
#include "oafrac/wordlength.hpp"

namespace {

oafrac::Fraction pow4() {
  oafrac::LinearSystem sys{oafrac::Ring::zmod(4), {{1, 1, 1, 2}}, {0}};
  return oafrac::modular_fraction(4, 4, sys);
}

oafrac::Fraction sec2() {
  oafrac::LinearSystem sys{oafrac::Ring::gf(3), {{1, 2, 2}}, {1}};
  return oafrac::regular_fraction(3, 3, sys);
}

void bm_gwlp_characters_4p4(benchmark::State& state) {
  oafrac::Fraction f = pow4();
  for (auto _ : state)
    benchmark::DoNotOptimize(oafrac::gwlp_characters(f));
}
BENCHMARK(bm_gwlp_characters_4p4);

void bm_gwlp_krawtchouk_4p4(benchmark::State& state) {
  oafrac::Fraction f = pow4();
  for (auto _ : state)
    benchmark::DoNotOptimize(oafrac::gwlp_krawtchouk(f));
}
BENCHMARK(bm_gwlp_krawtchouk_4p4);

void bm_strength_4p4(benchmark::State& state) {
  oafrac::Fraction f = pow4();
  for (auto _ : state)
    benchmark::DoNotOptimize(oafrac::strength_by_projection(f));
}
BENCHMARK(bm_strength_4p4);

void bm_strength_independence_4p4(benchmark::State& state) {
  oafrac::Fraction f = pow4();
  for (auto _ : state)
    benchmark::DoNotOptimize(oafrac::strength_by_independence(f));
}
BENCHMARK(bm_strength_independence_4p4);

void bm_resolution_3p3(benchmark::State& state) {
  oafrac::Fraction f = sec2();
  for (auto _ : state)
    benchmark::DoNotOptimize(oafrac::resolution_max(f));
}
BENCHMARK(bm_resolution_3p3);

void bm_verify_identities_3p3(benchmark::State& state) {
  oafrac::Fraction f = sec2();
  for (auto _ : state)
    benchmark::DoNotOptimize(oafrac::verify_identities(f));
}
BENCHMARK(bm_verify_identities_3p3);

}  // namespace

BENCHMARK_MAIN();
