#include <benchmark/benchmark.h>

#include <random>

#include "interlab/monotone_interp.hpp"
#include "interlab/nonmono_interp.hpp"
#include "interlab/preferential.hpp"
#include "interlab/prop_logic.hpp"
#include "interlab/revision.hpp"

namespace {

using namespace interlab;

Signature boolean_n(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return Signature::boolean(names);
}

ModelSet random_set(const Signature& sig, std::mt19937_64& rng) {
  return random_subset(std::make_shared<const Signature>(sig), rng);
}

void BM_SemanticInterpolant(benchmark::State& state) {
  const Signature sig = boolean_n(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  const ModelSet outer = random_set(sig, rng);
  const ModelSet inner = random_subset(outer, rng);
  for (auto _ : state) benchmark::DoNotOptimize(semantic_interpolant(inner, outer));
}
BENCHMARK(BM_SemanticInterpolant)->Arg(4)->Arg(8)->Arg(12);

void BM_Mu(benchmark::State& state) {
  const Signature sig = boolean_n(static_cast<int>(state.range(0)));
  const auto circ = PreferenceStructure::circumscription(sig);
  std::mt19937_64 rng(2);
  const ModelSet s = random_set(sig, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mu(circ, s));
}
BENCHMARK(BM_Mu)->Arg(4)->Arg(6)->Arg(8);

void BM_IsSmooth(benchmark::State& state) {
  const auto circ = PreferenceStructure::circumscription(boolean_n(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth(circ));
}
BENCHMARK(BM_IsSmooth)->Arg(3)->Arg(4);

void BM_CheckRule(benchmark::State& state) {
  const Signature sig = boolean_n(4);
  const auto circ = PreferenceStructure::circumscription(sig);
  const CoordSplit split = CoordSplit::from_left(sig, {"x0", "x1"});
  const Rule rule = static_cast<Rule>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_rule(rule, circ, split));
  state.SetLabel(to_string(rule));
}
BENCHMARK(BM_CheckRule)
    ->Arg(static_cast<int>(Rule::kMu1))
    ->Arg(static_cast<int>(Rule::kMu2))
    ->Arg(static_cast<int>(Rule::kMu3))
    ->Unit(benchmark::kMillisecond);

void BM_SearchInterpolant(benchmark::State& state) {
  const Signature sig = boolean_n(4);
  const auto circ = PreferenceStructure::circumscription(sig);
  const Formula phi = parse_formula("x0 & x1 & x2"), psi = parse_formula("x1 | x2 | x3");
  for (auto _ : state) benchmark::DoNotOptimize(search_interpolant(phi, psi, circ, 3));
}
BENCHMARK(BM_SearchInterpolant);

void BM_Bar(benchmark::State& state) {
  const Signature sig = boolean_n(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(3);
  const ModelSet x = random_set(sig, rng), y = random_set(sig, rng);
  const DistanceModel d = state.range(1) ? DistanceModel::set_variant() : DistanceModel::counting();
  for (auto _ : state) benchmark::DoNotOptimize(bar(x, y, d));
}
BENCHMARK(BM_Bar)->Args({4, 0})->Args({4, 1})->Args({8, 0})->Args({8, 1});

}  // namespace
BENCHMARK_MAIN();
