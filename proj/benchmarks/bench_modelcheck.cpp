#include <benchmark/benchmark.h>

#include <vector>

#include "otm/formula.hpp"
#include "otm/modelcheck.hpp"

namespace {

using otm::Ordinal;

// The ordinals below n under membership.
otm::CodedStructure ordinal_structure(std::uint64_t n) {
  std::vector<otm::Edge> edges;
  for (std::uint64_t b = 0; b < n; ++b) {
    for (std::uint64_t a = 0; a < b; ++a) edges.push_back({Ordinal(a), Ordinal(b)});
  }
  std::vector<Ordinal> domain;
  for (std::uint64_t a = 0; a < n; ++a) domain.push_back(Ordinal(a));
  return otm::structure_from_edges(domain, edges);
}

void BM_Extensionality(benchmark::State& state) {
  const auto s = ordinal_structure(static_cast<std::uint64_t>(state.range(0)));
  const std::vector<otm::FormulaPtr> f{otm::fol::extensionality()};
  for (auto _ : state) benchmark::DoNotOptimize(otm::check_fragment(s, f));
}

void BM_WellFoundedRanks(benchmark::State& state) {
  const auto s = ordinal_structure(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(otm::wf_ranks(s));
}

}  // namespace

BENCHMARK(BM_Extensionality)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WellFoundedRanks)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);
