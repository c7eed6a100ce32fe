#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "otm/claim2.hpp"
#include "otm/enumerate.hpp"
#include "otm/machine.hpp"
#include "otm/text.hpp"

namespace {

using otm::Ordinal;

otm::Program sample(const std::string& name) {
  std::ifstream in(std::string(OTMLAB_SAMPLES_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return otm::parse_program(buf.str());
}

// Finite sweep over 1^n,0: pure successor steps plus failed pattern searches.
void BM_FiniteSweep(benchmark::State& state) {
  const otm::Program p = sample("right_until_0.otm");
  otm::Word x = otm::Word::uniform(Ordinal(static_cast<std::uint64_t>(state.range(0))), 1);
  x.append(Ordinal(1), 0);
  for (auto _ : state) benchmark::DoNotOptimize(otm::run(p, x, Ordinal::omega()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LimitSweep(benchmark::State& state) {
  const otm::Program p = sample("right_until_0.otm");
  const otm::Word x = otm::parse_word("1^(w),0");
  for (auto _ : state) benchmark::DoNotOptimize(otm::run(p, x, otm::mul(Ordinal::omega(), 2)));
}

void BM_NestedSweep(benchmark::State& state) {
  const otm::Program p = sample("double_sweep.otm");
  const otm::Word x = otm::parse_word("1^(w)");
  const Ordinal budget = otm::pow(Ordinal::omega(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(otm::run(p, x, budget));
}

void BM_Claim2(benchmark::State& state) {
  const otm::ProgramIndex i = otm::encode(sample("double_sweep.otm"));
  const otm::Word x = otm::parse_word("1^(w^2)");
  for (auto _ : state) benchmark::DoNotOptimize(otm::claim2_simulate(i, x));
}

void BM_EncodeDecode(benchmark::State& state) {
  const otm::Program p = sample("double_sweep.otm");
  for (auto _ : state) benchmark::DoNotOptimize(otm::enumerate(otm::encode(p)));
}

}  // namespace

BENCHMARK(BM_FiniteSweep)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LimitSweep)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NestedSweep)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Claim2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EncodeDecode);
