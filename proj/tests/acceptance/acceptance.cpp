// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "otm/claim2.hpp"
#include "otm/enumerate.hpp"
#include "otm/langs.hpp"
#include "otm/machine.hpp"
#include "otm/modelcheck.hpp"
#include "support/fixtures.hpp"
#include "support/naive_eval.hpp"
#include "support/ordinal_oracle.hpp"
#include "support/reference_tm.hpp"

using namespace otm;
using fixtures::w;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

Result ordinal_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const auto values = fixtures::below_w3_small();
  oracle::Arithmetic ref;
  std::size_t cases = 0, mismatches = 0;
  std::string first;
  auto check = [&](const char* op, const Ordinal& a, const Ordinal& b, const Ordinal& got, const oracle::Ord& want) {
    ++cases;
    if (oracle::from_library(got) == want) return;
    if (mismatches++ == 0) {
      first = std::string(op) + "(" + to_string(a) + ", " + to_string(b) + ") = " + to_string(got) +
              ", oracle " + oracle::show(want);
    }
  };
  for (const Ordinal& a : values) {
    for (const Ordinal& b : values) {
      const oracle::Ord oa = oracle::from_library(a), ob = oracle::from_library(b);
      check("add", a, b, add(a, b), ref.add(oa, ob));
      check("mul", a, b, mul(a, b), ref.mul(oa, ob));
      check("pow", a, b, pow(a, b), ref.pow(oa, ob));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << cases << " cases, " << mismatches << " mismatches, " << seconds << " s";
  if (mismatches) d << "; first: " << first;
  return {mismatches == 0 && seconds < 60.0, d.str()};
}

Result cnf_split_round_trip() {
  std::mt19937_64 rng(20240611);
  std::size_t failures = 0;
  const std::size_t n = 10000;
  for (std::size_t i = 0; i < n; ++i) {
    const Ordinal b = fixtures::random_ordinal(rng, 1 + static_cast<int>(i % 3));
    const CnfSplit s = cnf_split(b);
    const Ordinal rebuilt = add(mul(w(), s.quotient), Ordinal(s.finite_part));
    if (rebuilt != b || cnf_join(s) != b) ++failures;
  }
  return {failures == 0, std::to_string(n) + " ordinals, " + std::to_string(failures) + " failures"};
}

// Records every concrete configuration the interpreter passes through.
struct Recorder : RunObserver {
  std::vector<std::pair<Ordinal, Configuration>> steps;
  std::size_t jumps = 0;
  void on_step(const Ordinal& t, const Configuration& c) override { steps.emplace_back(t, c); }
  void on_jump(const LimitJump&) override { ++jumps; }
};

bool matches(const Configuration& c, const reference::Snapshot& s) {
  if (c.state != s.state) return false;
  for (std::size_t t = 0; t < s.heads.size(); ++t) {
    if (c.heads[t] != Ordinal(s.heads[t])) return false;
    const Word& contents = c.tapes[t].contents();
    if (contents.length() != Ordinal(s.tapes[t].size())) return false;
    for (std::size_t i = 0; i < s.tapes[t].size(); ++i) {
      if (contents.at(Ordinal(i)) != s.tapes[t][i]) return false;
    }
  }
  return true;
}

Result finite_conservativity() {
  std::mt19937_64 rng(7);
  std::size_t corpus = 0, divergences = 0, total_steps = 0;
  std::string first;
  while (corpus < 20) {
    const std::size_t states = 3 + rng() % 4;
    const Program p = fixtures::random_program(rng, states, 2 + rng() % 2);
    std::vector<std::uint8_t> input(rng() % 8);
    for (auto& bit : input) bit = static_cast<std::uint8_t>(rng() % 2);
    const auto ref = reference::run(p, input, 400);
    if (ref.back().state != p.halt() || ref.size() < 8) continue;  // keep halting, nontrivial runs
    ++corpus;
    Word in;
    for (auto bit : input) in.append(Ordinal(1), bit);
    Recorder rec;
    const RunOutcome o = run(p, in, w(), {}, &rec);
    bool ok = o.kind == OutcomeKind::halted && rec.jumps == 0 && rec.steps.size() == ref.size() &&
              o.time == Ordinal(ref.size() - 1);
    for (std::size_t i = 0; ok && i < ref.size(); ++i) {
      ok = rec.steps[i].first == Ordinal(i) && matches(rec.steps[i].second, ref[i]);
    }
    total_steps += ref.size() - 1;
    if (!ok && divergences++ == 0) first = "program with index " + encode(p).str();
  }
  std::string d = std::to_string(corpus) + " programs, " + std::to_string(total_steps) + " steps, " +
                  std::to_string(divergences) + " divergences";
  if (divergences) d += "; first: " + first;
  return {divergences == 0, d};
}

Result limit_fixtures() {
  const Ordinal budget = pow(w(), Ordinal(3));
  const RunOutcome sweep = run(fixtures::right_until_0(), fixtures::word("1^w,0"), budget);
  const Ordinal want_sweep = add(w(), Ordinal(1));
  const RunOutcome nested = run(fixtures::double_sweep(), fixtures::word("1^w"), budget);
  const Ordinal want_nested = add(mul(w(), w()), Ordinal(1));
  const bool ok = sweep.kind == OutcomeKind::halted && sweep.time == want_sweep &&
                  nested.kind == OutcomeKind::halted && nested.time == want_nested;
  return {ok, "right sweep on 1^w,0 halts at " + to_string(sweep.time) + " (want " + to_string(want_sweep) +
                  "); double sweep on 1^w halts at " + to_string(nested.time) + " (want " +
                  to_string(want_nested) + ")"};
}

Result claim2_bound() {
  const std::vector<Ordinal> lengths{mul(w(), w()), mul(mul(w(), w()), Ordinal(2)), pow(w(), Ordinal(3))};
  struct Inner {
    const char* name;
    Program program;
    bool exhausts;
  };
  const std::vector<Inner> inners{{"accept", fixtures::answer(1), false},
                                  {"right-until-0", fixtures::right_until_0(), false},
                                  {"sweep-forever", fixtures::sweep_forever(), true}};
  std::size_t checks = 0, failures = 0;
  std::string first;
  for (const Ordinal& len : lengths) {
    const Word input = Word::uniform(len, 1);
    const Ordinal upper = mul(len, Ordinal(4));
    const Ordinal lower = mul(len, Ordinal(2));
    for (const Inner& inner : inners) {
      ++checks;
      const Claim2Outcome c = claim2_simulate(encode(inner.program), input);
      bool ok = c.outcome.kind == OutcomeKind::halted && c.outcome.time < upper;
      if (inner.exhausts) ok = ok && c.stopwatch.exhausted && c.outcome.time >= lower;
      if (!ok && failures++ == 0) {
        first = std::string(inner.name) + " on |w| = " + to_string(len) + ": time " + to_string(c.outcome.time);
      }
    }
  }
  std::string d = std::to_string(checks) + " runs, " + std::to_string(failures) + " failures";
  if (failures) d += "; first: " + first;
  return {failures == 0, d};
}

Result claim1_diagonal() {
  const std::vector<std::pair<const char*, Program>> deciders{{"accept", fixtures::answer(1)},
                                                              {"reject", fixtures::answer(0)},
                                                              {"identity", fixtures::identity()},
                                                              {"negate", fixtures::negate()},
                                                              {"right-until-0", fixtures::right_until_0()}};
  // Each decider halts within its input length. Right-until-0 walks the
  // whole prefix 1^j, about 2^21 steps.
  SimulationLimits limits;
  limits.step_cap = 1 << 23;
  std::size_t disagreements = 0;
  std::string d;
  for (const auto& [name, p] : deciders) {
    const ProgramIndex j = encode(p);
    Word input = Word::uniform(Ordinal(j.convert_to<std::uint64_t>()), 1);
    input.append(Ordinal(1), 0);
    input.append(mul(w(), w()), 1);
    const Membership m = decide_L_speedup(input, limits);
    const RunOutcome direct = run(p, input, speedup_budget(input.length()), limits);
    const bool accepts = direct.kind == OutcomeKind::halted && direct.accept == 1;
    const bool disagrees = m.value == (accepts ? Verdict::out : Verdict::in) && m.index == j;
    disagreements += disagrees;
    if (!d.empty()) d += ", ";
    d += std::string(name) + ": P accepts=" + (accepts ? "1" : "0") + " verdict=" + to_string(m.value);
  }
  return {disagreements == deciders.size(), d};
}

Result ladner_budget_exact() {
  std::mt19937_64 rng(99);
  oracle::Arithmetic ref;
  std::size_t mismatches = 0, n = 0;
  while (n < 100) {
    // |x| = w * s + k with s >= 1. Exponents of s stay below w^3 so the
    // oracle's recursion stays shallow.
    const Ordinal s = n % 2 ? fixtures::random_ordinal(rng, 2, 1, 2) : fixtures::random_ordinal(rng, 1, 3, 4);
    if (s.is_zero()) continue;
    const std::uint64_t k = rng() % 5;
    const Word x = Word::uniform(add(mul(w(), s), Ordinal(k)), 1);
    ++n;
    const LadnerInstance inst = ladner_instance(x);
    const oracle::Ord os = oracle::from_library(s);
    const oracle::Ord want = ref.mul(ref.pow(os, os), os);
    if (inst.scale != s || inst.index != k || !(oracle::from_library(ladner_budget(inst.scale)) == want)) {
      ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(n) + " lengths, " + std::to_string(mismatches) + " mismatches"};
}

Result meter_bound() {
  std::mt19937_64 rng(5);
  fixtures::FormulaGenerator gen(11);
  const std::uint64_t c = 4;
  std::size_t cases = 0, over = 0, disagree = 0;
  std::uint64_t worst_num = 0, worst_den = 1;
  const std::vector<Ordinal> pool{Ordinal(0), Ordinal(1), Ordinal(2), Ordinal(3), w(), add(w(), Ordinal(1)),
                                  mul(w(), w()), pow(w(), w())};
  for (int s = 0; s < 40; ++s) {
    const std::size_t size = 1 + rng() % 6;
    std::vector<Ordinal> elems(pool.begin(), pool.end());
    std::shuffle(elems.begin(), elems.end(), rng);
    elems.resize(size);
    naive::Structure plain;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < size; ++i) {
      plain.domain.push_back(static_cast<int>(i));
      for (std::size_t j = 0; j < size; ++j) {
        if (rng() % 3 == 0) {
          plain.edges.insert({static_cast<int>(i), static_cast<int>(j)});
          edges.emplace_back(elems[i], elems[j]);
        }
      }
    }
    const CodedStructure coded = structure_from_edges(elems, edges);
    const std::uint64_t d = size_parameter(coded);
    for (int f = 0; f < 25; ++f) {
      const FormulaPtr phi = gen.sentence(1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 5));
      const int n = quantifier_count(*phi) + membership_count(*phi);
      CostMeter meter;
      const bool got = eval(*phi, coded, {}, meter);
      ++cases;
      if (got != naive::holds(*phi, plain)) ++disagree;
      std::uint64_t dn = 1;
      for (int i = 0; i < n; ++i) dn *= d;
      if (meter.probes > dn * c) ++over;
      if (dn && meter.probes * worst_den > worst_num * dn) {
        worst_num = meter.probes;
        worst_den = dn;
      }
    }
  }
  std::ostringstream out;
  out << cases << " (structure, sentence) pairs, " << over << " above d^n*" << c << ", " << disagree
      << " disagreements with the naive evaluator; largest ops/d^n = " << static_cast<double>(worst_num) / worst_den;
  return {over == 0 && disagree == 0, out.str()};
}

Result hierarchy_monotone() {
  const Ordinal len = mul(w(), w());
  const std::vector<Ordinal> levels{Ordinal(1), Ordinal(2), Ordinal(3), w()};
  std::size_t pairs = 0, failures = 0;
  std::string d;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) d += " < ";
    d += to_string(hierarchy_budget(len, levels[i]));
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      ++pairs;
      if (!(hierarchy_budget(len, levels[i]) < hierarchy_budget(len, levels[j]))) ++failures;
    }
  }
  return {failures == 0, std::to_string(pairs) + " pairs: " + d};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"ordinal oracle equivalence", ordinal_oracle_equivalence},
      {"CNF split round trip", cnf_split_round_trip},
      {"finite conservativity", finite_conservativity},
      {"limit fixtures", limit_fixtures},
      {"Claim 2 bound", claim2_bound},
      {"Claim 1 diagonal", claim1_diagonal},
      {"Ladner-language budget", ladner_budget_exact},
      {"model-checker meter bound", meter_bound},
      {"hierarchy budget monotonicity", hierarchy_monotone},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << std::endl;
    failed += !r.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
