#include <benchmark/benchmark.h>

#include "insdel/compilers.hpp"
#include "insdel/oracle.hpp"

namespace {

insdel::Grammar anbn_grammar() {
  insdel::Grammar g;
  g.nonterminals = {"S", "A", "B", "C'"};
  g.terminals = {"a", "b"};
  g.start = "S";
  g.productions = {{1, {"S"}, {"A", "C'"}},
                   {2, {"C'"}, {"S", "B"}},
                   {3, {"S"}, {}},
                   {4, {"A"}, {"a"}},
                   {5, {"B"}, {"b"}}};
  return g;
}

insdel::Bounds bounds_for(std::size_t len) {
  insdel::Bounds b;
  b.max_output_len = len;
  b.max_intermediate_len = len + 10;
  b.max_steps = 100;
  return b;
}

void BM_OracleSlice(benchmark::State& state) {
  const insdel::Grammar g = anbn_grammar();
  const insdel::Bounds b = bounds_for(state.range());
  for (auto _ : state) {
    auto res = insdel::derive_bfs(g, b);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_OracleSlice)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CompileT1(benchmark::State& state) {
  const insdel::Grammar g = anbn_grammar();
  for (auto _ : state) {
    auto sys = insdel::compile_t1(g);
    benchmark::DoNotOptimize(sys);
  }
}
BENCHMARK(BM_CompileT1);

void BM_MembraneRun(benchmark::State& state) {
  const insdel::PSystemDef sys = insdel::compile_t1(anbn_grammar());
  const insdel::Bounds b = bounds_for(state.range());
  for (auto _ : state) {
    auto res = insdel::run(sys, b);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_MembraneRun)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
