#include <benchmark/benchmark.h>

#include "cqsres/braid.hpp"
#include "cqsres/components.hpp"
#include "cqsres/quiver.hpp"
#include "cqsres/zerofrac.hpp"

using namespace cqsres;

namespace {

void bench_expand(benchmark::State& state) {
  Fraction f = make_fraction(Int("982451653"), Int("387420489"));
  for (auto _ : state) benchmark::DoNotOptimize(hj_expand(f));
}
BENCHMARK(bench_expand);

void bench_blow_down(benchmark::State& state) {
  // Maximally 1-laden string: r copies of [1, 3] end in a short canonical tail.
  HJString s;
  for (int i = 0; i < 200; ++i) {
    s.push_back(1);
    s.push_back(3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(blow_down(s));
}
BENCHMARK(bench_blow_down);

void bench_zero_fractions(benchmark::State& state) {
  Fraction f = make_fraction(85, 49);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_zero_fractions(f));
}
BENCHMARK(bench_zero_fractions);

void bench_zero_fraction_oracle(benchmark::State& state) {
  HJString b = hj_dual(make_fraction(85, 49));
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::zero_fractions_by_blowup(b));
}
BENCHMARK(bench_zero_fraction_oracle);

void bench_components(benchmark::State& state) {
  Fraction f = make_fraction(85, 49);
  for (auto _ : state) benchmark::DoNotOptimize(components(f));
}
BENCHMARK(bench_components);

void bench_schedule_replay(benchmark::State& state) {
  Fraction f = make_fraction(89, 33);
  ZeroFraction z;
  for (const ZeroFraction& cand : enumerate_zero_fractions(f))
    if (cand.k == HJString{2, 2, 1, 5, 1, 2}) z = cand;
  WahlResolution m = m_resolution(f, z);
  BraidWord word = mn_schedule(m.r());
  for (auto _ : state) benchmark::DoNotOptimize(apply_word(m, word));
}
BENCHMARK(bench_schedule_replay);

void bench_quiver(benchmark::State& state) {
  Fraction f = make_fraction(89, 33);
  ZeroFraction z;
  for (const ZeroFraction& cand : enumerate_zero_fractions(f))
    if (cand.k == HJString{2, 2, 1, 5, 1, 2}) z = cand;
  WahlResolution n = n_resolution(f, z);
  for (auto _ : state) benchmark::DoNotOptimize(build_quiver(n));
}
BENCHMARK(bench_quiver);

void bench_dolgachev(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dolgachev(5, 4));
}
BENCHMARK(bench_dolgachev);

}  // namespace

BENCHMARK_MAIN();
