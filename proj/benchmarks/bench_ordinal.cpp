#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "otm/ordinal.hpp"

namespace {

using otm::Ordinal;

// Ordinals with `height` levels of exponents and up to `terms` terms per level.
Ordinal random_ordinal(std::mt19937_64& rng, int height, int terms) {
  if (height == 0) return Ordinal(1 + rng() % 9);
  std::vector<Ordinal> exps;
  for (int i = 0; i < 1 + static_cast<int>(rng() % terms); ++i) exps.push_back(random_ordinal(rng, height - 1, terms));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<otm::Term> ts;
  for (auto& e : exps) ts.push_back({e, 1 + rng() % 9});
  ts.push_back({Ordinal(), 1 + rng() % 9});
  return Ordinal::from_terms(std::move(ts));
}

std::vector<Ordinal> pool(int height) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(height) * 7919);
  std::vector<Ordinal> out;
  for (int i = 0; i < 64; ++i) out.push_back(random_ordinal(rng, height, 4));
  return out;
}

template <typename Op>
void binary(benchmark::State& state, Op op) {
  const auto xs = pool(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(op(xs[i % xs.size()], xs[(i * 7 + 3) % xs.size()]));
    ++i;
  }
}

void BM_Add(benchmark::State& state) { binary(state, [](const Ordinal& a, const Ordinal& b) { return otm::add(a, b); }); }
void BM_Mul(benchmark::State& state) { binary(state, [](const Ordinal& a, const Ordinal& b) { return otm::mul(a, b); }); }
void BM_Pow(benchmark::State& state) { binary(state, [](const Ordinal& a, const Ordinal& b) { return otm::pow(a, b); }); }
void BM_Compare(benchmark::State& state) {
  binary(state, [](const Ordinal& a, const Ordinal& b) { return otm::compare(a, b); });
}
void BM_Pair(benchmark::State& state) {
  binary(state, [](const Ordinal& a, const Ordinal& b) { return otm::pair(a, b); });
}

void BM_Unpair(benchmark::State& state) {
  const auto xs = pool(static_cast<int>(state.range(0)));
  std::vector<Ordinal> codes;
  for (std::size_t i = 0; i < xs.size(); ++i) codes.push_back(otm::pair(xs[i], xs[(i * 5 + 1) % xs.size()]));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(otm::unpair(codes[i++ % codes.size()]));
}

void BM_CnfSplit(benchmark::State& state) {
  const auto xs = pool(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(otm::cnf_split(xs[i++ % xs.size()]));
}

}  // namespace

BENCHMARK(BM_Add)->DenseRange(1, 3);
BENCHMARK(BM_Mul)->DenseRange(1, 3);
BENCHMARK(BM_Pow)->DenseRange(1, 2);
BENCHMARK(BM_Compare)->DenseRange(1, 3);
BENCHMARK(BM_Pair)->DenseRange(1, 3);
BENCHMARK(BM_Unpair)->DenseRange(1, 2);
BENCHMARK(BM_CnfSplit)->DenseRange(1, 3);
