// Microbenchmarks contrasting the closed forms with their brute-force
// oracles. The CLI's `bench` subcommand reports the same contrast as medians;
// these give google-benchmark's adaptive timing for development work.
#include <benchmark/benchmark.h>

#include "placirc/circulant.hpp"
#include "placirc/closed_form.hpp"
#include "placirc/recurrence.hpp"

#include <cstddef>

using namespace placirc;

namespace {

void BM_eig_closed(benchmark::State& state) {
  const RecurrenceSpec spec = RecurrenceSpec::perrin();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto s = eig_closed_spectrum(spec, n);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_eig_closed)->Arg(16)->Arg(64)->Arg(256);

void BM_eig_oracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CirculantInt m = build_from_sequence(RecurrenceSpec::perrin(), n);
  for (auto _ : state) {
    Spectrum s = eig_oracle(m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_eig_oracle)->Arg(16)->Arg(64)->Arg(256);

void BM_det_closed(benchmark::State& state) {
  const RecurrenceSpec spec = RecurrenceSpec::perrin();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    DetValue v = det_closed(spec, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_det_closed)->Arg(8)->Arg(16)->Arg(32);

void BM_det_exact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CirculantInt m = build_from_sequence(RecurrenceSpec::perrin(), n);
  for (auto _ : state) {
    BigInt d = det_exact(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_det_exact)->Arg(8)->Arg(16)->Arg(32);

void BM_norm_closed(benchmark::State& state) {
  const RecurrenceSpec spec = RecurrenceSpec::perrin();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    BigInt v = norm_closed(spec, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_norm_closed)->Arg(64)->Arg(256)->Arg(1024);

void BM_term_walk(benchmark::State& state) {
  const RecurrenceSpec spec = RecurrenceSpec::perrin();
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    BigInt v = term_at(spec, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_term_walk)->Arg(1000)->Arg(10000);

void BM_term_fast(benchmark::State& state) {
  const RecurrenceSpec spec = RecurrenceSpec::perrin();
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    BigInt v = term_at_fast(spec, n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_term_fast)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
