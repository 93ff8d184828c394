#include <benchmark/benchmark.h>

#include "rolecheck/bridge.hpp"
#include "rolecheck/checker.hpp"
#include "rolecheck/generators.hpp"
#include "rolecheck/model_io.hpp"

namespace {

using namespace rolecheck;

const Formula& reach_formula() {
  static const Formula f = parse_formula("<1,2> F in_gate");
  return f;
}

void BM_check_roles(benchmark::State& state) {
  Rcgs m = gen_train_controller(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mcheck(m, reach_formula()));
}
BENCHMARK(BM_check_roles)->RangeMultiplier(2)->Range(2, 64);

void BM_check_expanded(benchmark::State& state) {
  Rcgs m = gen_train_controller(static_cast<int>(state.range(0)));
  Cgs c = translate(m);
  for (auto _ : state) benchmark::DoNotOptimize(cgs_mcheck(c, reach_formula()));
}
BENCHMARK(BM_check_expanded)->RangeMultiplier(2)->Range(2, 16);

void BM_check_naive(benchmark::State& state) {
  Rcgs m = gen_train_controller(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mcheck_naive(m, reach_formula()));
}
BENCHMARK(BM_check_naive)->RangeMultiplier(2)->Range(2, 8);

void BM_translate(benchmark::State& state) {
  Rcgs m = gen_train_controller(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(translate(m));
}
BENCHMARK(BM_translate)->RangeMultiplier(2)->Range(2, 16);

void BM_profile_enumeration(benchmark::State& state) {
  Rcgs m = gen_autonomous_trains(static_cast<int>(state.range(0)));
  Coalition all = Coalition::all(m.agent_count);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_profiles(m, 0, all));
}
BENCHMARK(BM_profile_enumeration)->DenseRange(3, 7);

void BM_serialize_roundtrip(benchmark::State& state) {
  Rcgs m = gen_train_controller(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::string text = serialize_model(m);
    benchmark::DoNotOptimize(parse_model(text));
  }
}
BENCHMARK(BM_serialize_roundtrip)->RangeMultiplier(4)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
