// Compares the serial reference scan with the OpenMP-parallel scan over the
// same bounded model space. Both must return the identical (order-minimal)
// witness; only wall time may differ.
#include <benchmark/benchmark.h>

#include "ldiip/decide.hpp"

using namespace ldiip;

namespace {

// Worth-scanning workload: two modal keys, two props, up to 4 states; the
// goal is unsatisfiable, so find_first visits the whole space.
const Formula& workload() {
  static const AgentUniverse u({"a", "b", "m", "m2"});
  static const Formula f =
      parse_formula("([m]a P) & ([m2]b Q) & ~([m]a P) & (a knows m2)", u);
  return f;
}

ModelEnumerator make_enumerator(int max_states) {
  static const AgentUniverse u({"a", "b", "m", "m2"});
  return ModelEnumerator(make_enum_spec(workload(), u, max_states));
}

void scan(benchmark::State& state, bool parallel) {
  ModelEnumerator e = make_enumerator(static_cast<int>(state.range(0)));
  const Formula& f = workload();
  auto pred = [&](const FiniteModel& m) {
    for (int s = 0; s < m.num_states; ++s)
      if (eval(m, s, f)) return true;
    return false;
  };
  long long visited = e.count_models();
  for (auto _ : state) {
    auto hit = e.find_first(pred, parallel);
    benchmark::DoNotOptimize(hit);
    if (hit) state.SkipWithError("unexpected witness");
  }
  state.counters["models"] = static_cast<double>(visited);
}

void BM_find_first_serial(benchmark::State& state) { scan(state, false); }
void BM_find_first_parallel(benchmark::State& state) { scan(state, true); }

BENCHMARK(BM_find_first_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_find_first_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
