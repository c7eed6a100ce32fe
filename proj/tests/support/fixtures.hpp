#pragma once

// Programs, words and generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "otm/formula.hpp"
#include "otm/ordinal.hpp"
#include "otm/program.hpp"
#include "otm/text.hpp"
#include "otm/word.hpp"

namespace fixtures {

using otm::Ordinal;

inline Ordinal w() { return Ordinal::omega(); }

inline otm::Word word(const std::string& text) { return otm::parse_word(text); }

// q0 moves right on tape 0 while it reads 1 and halts on the first 0.
inline otm::Program right_until_0() {
  return otm::parse_program(R"(#tapes 2
#start q0
#halt qH
q0 0,0 -> qH 0,0 S,S
q0 1,0 -> q0 1,0 R,S
q0 0,1 -> qH 0,1 S,S
q0 1,1 -> q0 1,1 R,S
)");
}

// Repeated sweeps over the 1s of tape 0, resetting at the limit. On 1^w it
// halts at w^2+1: each sweep takes w+2 steps, and only at time w^2 does
// the flag in tape 1 cell 0 read 0 in state q1.
inline otm::Program double_sweep() {
  return otm::parse_program(R"(#tapes 2
#start q0
#halt qH
q0 0,0 -> q1 0,1 S,S
q0 1,0 -> q1 1,1 S,S
q0 0,1 -> q1 0,1 S,S
q0 1,1 -> q1 1,1 S,S
q1 0,0 -> qH 0,0 S,S
q1 1,0 -> qH 1,0 S,S
q1 0,1 -> q2 0,0 R,S
q1 1,1 -> q2 1,0 R,S
q2 0,0 -> q1 0,1 L,S
q2 1,0 -> q2 1,0 R,S
q2 0,1 -> q1 0,1 L,S
q2 1,1 -> q2 1,1 R,S
)");
}

// Flips a flag in tape 1 cell 0 between q1 and q2 without moving. At w the
// state is the liminf q1 and the flag reads 0, which q1 never sees at
// successor times, so the run halts at w+1 and accepts.
inline otm::Program alternate() {
  return otm::parse_program(R"(#tapes 2
#start q0
#halt qH
q0 0,0 -> q1 0,1 S,S
q0 1,0 -> q1 1,1 S,S
q0 0,1 -> q1 0,1 S,S
q0 1,1 -> q1 1,1 S,S
q1 0,0 -> qH 1,0 S,S
q1 1,0 -> qH 1,0 S,S
q1 0,1 -> q2 0,0 S,S
q1 1,1 -> q2 1,0 S,S
q2 0,0 -> q1 0,1 S,S
q2 1,0 -> q1 1,1 S,S
q2 0,1 -> q1 0,1 S,S
q2 1,1 -> q1 1,1 S,S
)");
}

// Moves right on tape 0 forever.
inline otm::Program sweep_forever() {
  return otm::parse_program(R"(#tapes 2
#start q0
#halt qH
q0 0,0 -> q0 0,0 R,S
q0 1,0 -> q0 1,0 R,S
q0 0,1 -> q0 0,1 R,S
q0 1,1 -> q0 1,1 R,S
)");
}

// Halts at once, writing `bit` into cell 0 of tape 0.
inline otm::Program answer(int bit) {
  const std::string b = std::to_string(bit);
  return otm::parse_program("#tapes 2\n#start q0\n#halt qH\n"
                            "q0 0,0 -> qH " + b + ",0 S,S\n"
                            "q0 1,0 -> qH " + b + ",0 S,S\n"
                            "q0 0,1 -> qH " + b + ",1 S,S\n"
                            "q0 1,1 -> qH " + b + ",1 S,S\n");
}

// Halts at once without writing anything new.
inline otm::Program identity() {
  return otm::parse_program(R"(#tapes 2
#start q0
#halt qH
q0 0,0 -> qH 0,0 S,S
q0 1,0 -> qH 1,0 S,S
q0 0,1 -> qH 0,1 S,S
q0 1,1 -> qH 1,1 S,S
)");
}

// Halts at once after flipping cell 0 of tape 0.
inline otm::Program negate() {
  return otm::parse_program(R"(#tapes 2
#start q0
#halt qH
q0 0,0 -> qH 1,0 S,S
q0 1,0 -> qH 0,0 S,S
q0 0,1 -> qH 1,1 S,S
q0 1,1 -> qH 0,1 S,S
)");
}

// Writes alternating 01 patterns to tape 1 while sweeping; its limit tape
// has no finite run-length form, so the run is undetermined.
inline otm::Program stripes() {
  return otm::parse_program(R"(#tapes 2
#start q0
#halt qH
q0 0,0 -> q1 0,1 S,R
q0 1,0 -> q1 1,1 S,R
q0 0,1 -> q1 0,1 S,R
q0 1,1 -> q1 1,1 S,R
q1 0,0 -> q0 0,0 S,R
q1 1,0 -> q0 1,0 S,R
q1 0,1 -> q0 0,0 S,R
q1 1,1 -> q0 1,0 S,R
)");
}

// ---------------------------------------------------------------------------
// Generators.

inline Ordinal random_ordinal(std::mt19937_64& rng, int height, int max_terms = 3, std::uint64_t max_coef = 9) {
  if (height <= 0) return Ordinal(rng() % (max_coef + 1));
  std::vector<Ordinal> exponents;
  const int terms = static_cast<int>(rng() % (max_terms + 1));
  for (int i = 0; i < terms; ++i) exponents.push_back(random_ordinal(rng, height - 1, max_terms, max_coef));
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  std::vector<otm::Term> ts;
  for (const Ordinal& e : exponents) ts.push_back({e, 1 + rng() % max_coef});
  return Ordinal::from_terms(std::move(ts));
}

// Every ordinal w^2*a + w*b + c with a, b, c <= 3.
inline std::vector<Ordinal> below_w3_small() {
  std::vector<Ordinal> out;
  for (std::uint64_t a = 0; a <= 3; ++a) {
    for (std::uint64_t b = 0; b <= 3; ++b) {
      for (std::uint64_t c = 0; c <= 3; ++c) {
        std::vector<otm::Term> ts;
        if (a) ts.push_back({Ordinal(2), a});
        if (b) ts.push_back({Ordinal(1), b});
        if (c) ts.push_back({Ordinal(), c});
        out.push_back(Ordinal::from_terms(std::move(ts)));
      }
    }
  }
  return out;
}

inline otm::Program random_program(std::mt19937_64& rng, std::size_t states, std::size_t tapes) {
  std::vector<otm::Transition> table;
  const std::uint32_t masks = 1U << tapes;
  for (std::size_t q = 0; q + 1 < states; ++q) {
    for (std::uint32_t r = 0; r < masks; ++r) {
      otm::Transition t;
      t.next = static_cast<std::uint32_t>(rng() % states);
      t.write = static_cast<std::uint32_t>(rng() % masks);
      for (std::size_t k = 0; k < tapes; ++k) t.moves.push_back(static_cast<otm::Move>(rng() % 3));
      table.push_back(std::move(t));
    }
  }
  return otm::Program(states, tapes, std::move(table));
}

// A closed formula with at most `quantifiers` quantifiers and `members`
// membership atoms.
class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed) : rng_(seed) {}

  otm::FormulaPtr sentence(int quantifiers, int members) {
    quantifiers_left_ = quantifiers;
    members_left_ = members;
    scope_.clear();
    fresh_ = 0;
    return quantified(3);
  }

 private:
  otm::FormulaPtr quantified(int depth) {
    std::string v = "v" + std::to_string(fresh_++);
    --quantifiers_left_;
    scope_.push_back(v);
    otm::FormulaPtr body = formula(depth);
    scope_.pop_back();
    return rng_() % 2 ? otm::fol::forall(v, body) : otm::fol::exists(v, body);
  }

  otm::FormulaPtr atom() {
    const std::string& x = scope_[rng_() % scope_.size()];
    const std::string& y = scope_[rng_() % scope_.size()];
    if (members_left_ > 0 && rng_() % 4 != 0) {
      --members_left_;
      return otm::fol::member(x, y);
    }
    return otm::fol::equal(x, y);
  }

  otm::FormulaPtr formula(int depth) {
    const auto choice = rng_() % 7;
    if (depth <= 0 || choice == 0) return atom();
    if (choice == 1 && quantifiers_left_ > 0) return quantified(depth - 1);
    if (choice == 2) return otm::fol::negation(formula(depth - 1));
    otm::FormulaPtr a = formula(depth - 1);
    otm::FormulaPtr b = formula(depth - 1);
    if (choice <= 4) return otm::fol::conjunction(a, b);
    if (choice == 5) return otm::fol::disjunction(a, b);
    return otm::fol::implication(a, b);
  }

  std::mt19937_64 rng_;
  int quantifiers_left_ = 0;
  int members_left_ = 0;
  int fresh_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace fixtures
