#include <benchmark/benchmark.h>

#include <vector>

#include "generators.hpp"
#include "s5/encoder.hpp"
#include "s5/normalizer.hpp"
#include "s5/oracle.hpp"
#include "s5/solver.hpp"

namespace {

std::vector<s5::CnfInstance> instances(s5::EncodingOptions options) {
  s5::testing::NormalFormGenerator gen(99, {.atoms = 12, .boxes = 10, .diamonds = 10, .clauses = 12});
  std::vector<s5::CnfInstance> out;
  for (int i = 0; i < 16; ++i) out.push_back(s5::encode(s5::normalize(gen.next()), options));
  return out;
}

void solve_with(benchmark::State& state, s5::EncodingOptions encoding, s5::Algorithm algorithm) {
  const auto cnfs = instances(encoding);
  s5::SolveOptions options;
  options.algorithm = algorithm;
  for (auto _ : state) {
    for (const auto& c : cnfs) benchmark::DoNotOptimize(s5::solve(c, options));
  }
}

void BM_CdclFull(benchmark::State& state) {
  solve_with(state, {s5::EncodingKind::full, {}}, s5::Algorithm::cdcl);
}
void BM_CdclReach(benchmark::State& state) {
  solve_with(state, {s5::EncodingKind::reach, {}}, s5::Algorithm::cdcl);
}
void BM_CdclReachAll(benchmark::State& state) {
  solve_with(state, {s5::EncodingKind::reach, s5::Enrichments::all()}, s5::Algorithm::cdcl);
}
void BM_DpllReach(benchmark::State& state) {
  solve_with(state, {s5::EncodingKind::reach, {}}, s5::Algorithm::dpll);
}

// The semantic oracle on the same kind of random formulas the test corpus uses.
void BM_ValuationSearch(benchmark::State& state) {
  s5::testing::FormulaGenerator gen(20240607, {.atoms = 5, .max_depth = 4, .conjuncts = 5});
  std::vector<s5::Formula> forms;
  for (int i = 0; i < 64; ++i) forms.push_back(gen.next());
  for (auto _ : state) {
    for (const auto& f : forms) benchmark::DoNotOptimize(s5::decide(f));
  }
}

}  // namespace

BENCHMARK(BM_CdclFull)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CdclReach)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CdclReachAll)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DpllReach)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValuationSearch)->Unit(benchmark::kMillisecond);
