#include <benchmark/benchmark.h>

#include <vector>

#include "generators.hpp"
#include "s5/encoder.hpp"
#include "s5/normalizer.hpp"

namespace {

using s5::testing::NormalFormGenerator;
using s5::testing::NormalFormShape;

std::vector<s5::S5NF> instances(int modal) {
  NormalFormShape shape{.atoms = 12, .boxes = modal, .diamonds = modal, .clauses = 12};
  NormalFormGenerator gen(7, shape);
  std::vector<s5::S5NF> out;
  for (int i = 0; i < 32; ++i) out.push_back(s5::normalize(gen.next()));
  return out;
}

void encode_with(benchmark::State& state, s5::EncodingOptions options) {
  const auto forms = instances(static_cast<int>(state.range(0)));
  std::size_t clauses = 0;
  for (auto _ : state) {
    for (const auto& f : forms) {
      auto c = s5::encode(f, options);
      clauses += c.num_clauses();
      benchmark::DoNotOptimize(c);
    }
  }
  state.counters["clauses/instance"] = benchmark::Counter(
      static_cast<double>(clauses) / static_cast<double>(forms.size()), benchmark::Counter::kAvgIterations);
}

void BM_EncodeHe(benchmark::State& state) { encode_with(state, {s5::EncodingKind::he, {}}); }
void BM_EncodeFull(benchmark::State& state) { encode_with(state, {s5::EncodingKind::full, {}}); }
void BM_EncodeReach(benchmark::State& state) { encode_with(state, {s5::EncodingKind::reach, {}}); }
void BM_EncodeReachAll(benchmark::State& state) {
  encode_with(state, {s5::EncodingKind::reach, s5::Enrichments::all()});
}

void BM_Normalize(benchmark::State& state) {
  s5::testing::FormulaGenerator gen(11, {.atoms = 5, .max_depth = 5, .max_boxes = 6, .max_diamonds = 6});
  std::vector<s5::Formula> forms;
  for (int i = 0; i < 64; ++i) forms.push_back(gen.next());
  for (auto _ : state) {
    for (const auto& f : forms) benchmark::DoNotOptimize(s5::normalize(f));
  }
}

}  // namespace

BENCHMARK(BM_EncodeHe)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_EncodeFull)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_EncodeReach)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_EncodeReachAll)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_Normalize);
