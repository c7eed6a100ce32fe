#include "otm/claim2.hpp"

#include <stdexcept>

namespace otm {

std::uint64_t simulation_step_cost(const Program& p) {
  return p.table().size() + 2 * p.tape_count() + 2;
}

Claim2Outcome claim2_simulate(const ProgramIndex& i, const Word& w, const SimulationLimits& limits) {
  const Ordinal& length = w.length();
  const Ordinal omega = Ordinal::omega();
  if (length < mul(omega, omega)) {
    throw std::invalid_argument("the stopwatch construction needs |w| >= w^2, got " + to_string(length));
  }
  Claim2Outcome result;
  const Program program = enumerate(i);
  result.step_cost = simulation_step_cost(program);

  const Ordinal stopwatch_length = mul(length, Ordinal(2));
  result.inner = run(program, w, stopwatch_length, limits);

  RunOutcome& out = result.outcome;
  out.ledger.push_back({"scan", omega});
  out.ledger.push_back({"prepare", length});
  if (result.inner.kind == OutcomeKind::limit_undetermined) {
    out.kind = OutcomeKind::limit_undetermined;
    out.note = result.inner.note;
    for (const LedgerEntry& e : out.ledger) out.time = add(out.time, e.cost);
    return result;
  }

  result.simulated_steps = result.inner.time;
  if (result.simulated_steps < length) {
    result.stopwatch = Stopwatch{0, result.simulated_steps, false};
  } else {
    result.stopwatch = Stopwatch{1, left_subtract(result.simulated_steps, length),
                                 result.simulated_steps == stopwatch_length};
  }
  out.ledger.push_back({"simulate c=" + std::to_string(result.step_cost), mul(Ordinal(result.step_cost), result.simulated_steps)});
  out.ledger.push_back({"answer", Ordinal(1)});
  for (const LedgerEntry& e : out.ledger) out.time = add(out.time, e.cost);

  const bool inner_accepted = result.inner.kind == OutcomeKind::halted && result.inner.accept == 1;
  out.kind = OutcomeKind::halted;
  out.accept = inner_accepted ? 0 : 1;
  out.output = Word::uniform(Ordinal(1), out.accept);
  return result;
}

}  // namespace otm
