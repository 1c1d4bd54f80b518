#include <benchmark/benchmark.h>

#include <invbound/groebner.hpp>
#include <invbound/invariants.hpp>
#include <invbound/molien.hpp>
#include <invbound/perm_group.hpp>

using namespace invbound;

namespace {

PermGroup psl27() {
  return group_closure({parse_cycles("(1 2 3 4 5 6 7)", 7), parse_cycles("(1 2)(3 6)", 7)}, 7);
}

void BM_closure_a8(benchmark::State& state) {
  auto a = parse_cycles("(1 2 3)", 8), b = parse_cycles("(2 3 4 5 6 7 8)", 8);
  for (auto _ : state) benchmark::DoNotOptimize(group_closure({a, b}, 8).order());
}
BENCHMARK(BM_closure_a8)->Unit(benchmark::kMillisecond);

void BM_molien_psl27(benchmark::State& state) {
  auto G = psl27();
  for (auto _ : state) benchmark::DoNotOptimize(molien_series(G, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_molien_psl27)->Arg(28)->Arg(56)->Unit(benchmark::kMillisecond);

void BM_t_value(benchmark::State& state) {
  auto G = psl27();
  for (auto _ : state) benchmark::DoNotOptimize(t_value(G));
}
BENCHMARK(BM_t_value);

void BM_buchberger_elementary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Polynomial> e;
  for (int k = 1; k <= n; ++k) e.push_back(elementary_symmetric(n, k));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(e).generators.size());
}
BENCHMARK(BM_buchberger_elementary)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_hilbert_driven(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Polynomial> p;
  for (int k = 1; k <= n; ++k) p.push_back(power_sum(n, k));
  GroebnerOptions opt;
  opt.field = state.range(1) ? CoefficientField::Prime : CoefficientField::Rational;
  for (auto _ : state) benchmark::DoNotOptimize(homogeneous_zero_dimensional(p, opt).zero_dimensional);
}
BENCHMARK(BM_hilbert_driven)->Args({5, 0})->Args({5, 1})->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

void BM_search(benchmark::State& state) {
  std::vector<PermGroup> groups = {group_closure({parse_cycles("(1 2 3 4 5)", 5)}, 5),
                                   group_closure({parse_cycles("(1 2 3 4 5 6)", 6)}, 6), psl27()};
  const auto& G = groups[state.range(0)];
  auto H = molien_series(G, default_truncation(G.degree()));
  auto candidates = candidate_degree_vectors(G, H);
  for (auto _ : state) benchmark::DoNotOptimize(find_primary_invariants(G, candidates).degrees);
}
BENCHMARK(BM_search)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
