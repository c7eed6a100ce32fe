#pragma once

// Cost-accounted replay of the alpha*4 decider for the speedup language:
// determine the program index, lay out a stopwatch of length |w| on two
// extra tapes T0 and T1, then simulate the program one step per stopwatch
// cell until it halts or the stopwatch runs out after |w|*2 steps.

#include <cstdint>

#include "otm/enumerate.hpp"
#include "otm/machine.hpp"

namespace otm {

// Finite cost of one simulated step: scan the table for the matching row,
// then write and move on every simulated tape, then advance the stopwatch
// and test for its border.
std::uint64_t simulation_step_cost(const Program& p);

struct Stopwatch {
  int tape = 0;      // 0 for T0, 1 for T1
  Ordinal position;  // head position on that tape
  bool exhausted = false;
};

struct Claim2Outcome {
  // The decider's own run: halted, accept = flipped answer of the inner
  // program, time = sum of the ledger.
  RunOutcome outcome;
  RunOutcome inner;
  std::uint64_t step_cost = 0;
  Ordinal simulated_steps;
  Stopwatch stopwatch;
};

// Requires |w| >= w^2 (std::invalid_argument otherwise).
Claim2Outcome claim2_simulate(const ProgramIndex& i, const Word& w, const SimulationLimits& limits = {});

}  // namespace otm
