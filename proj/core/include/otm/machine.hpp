#pragma once

// OTM interpreter with ordinal clock and liminf limit stages.
//
// Successor steps follow the transition table. At limit times every state,
// cell and head takes the liminf of its earlier values; a left move at a
// limit position (including 0) resets the head to 0. Limit stages are
// reached by detecting a behaviour pattern that provably repeats omega
// times and computing the liminf configuration in closed form. When no
// sound closed form exists the run reports limit_undetermined instead of
// guessing.

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "otm/ordinal.hpp"
#include "otm/program.hpp"
#include "otm/word.hpp"

namespace otm {

struct Configuration {
  std::uint32_t state = 0;
  std::vector<Ordinal> heads;
  std::vector<Tape> tapes;

  std::uint32_t read_mask() const;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Input on tape 0, all heads at 0, start state.
Configuration initial_configuration(const Program& p, const Word& input);

// One successor step; requires c.state != halt.
Configuration step(const Configuration& c, const Program& p);

// Default values are part of every CLI report header.
struct SimulationLimits {
  std::size_t window = 64;         // longest candidate period, in events
  int depth = 3;                   // deepest nesting of limit jumps
  std::uint64_t step_cap = 1 << 20;  // concrete steps allowed per run
};

enum class OutcomeKind { halted, out_of_budget, limit_undetermined };

std::string to_string(OutcomeKind kind);

struct LedgerEntry {
  std::string phase;
  Ordinal cost;
  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

struct RunOutcome {
  OutcomeKind kind = OutcomeKind::limit_undetermined;
  Ordinal time;
  std::optional<Word> output;  // tape 0 at halt, trailing 0s trimmed
  std::uint8_t accept = 0;     // cell 0 of tape 0 at halt
  std::vector<LedgerEntry> ledger;
  Configuration final_config;
  std::uint64_t concrete_steps = 0;
  std::uint64_t limit_jumps = 0;
  std::string note;  // why a run stopped early, when it did
};

// ---------------------------------------------------------------------------
// Event history used by limit detection.

// How a head moves across an event or a block of events. A returning head
// starts and ends at cell 0 and leaves its tape unchanged.
enum class Motion : std::uint8_t { stationary, sweeping, returning, other };

struct EventSignature;
using SignaturePtr = std::shared_ptr<const EventSignature>;

// Structural description of an event, compared between candidate periods.
struct EventSignature {
  int level = 0;  // 0 for a concrete step
  std::uint32_t state = 0;
  std::uint32_t read = 0;
  Transition rule;
  Ordinal duration;
  std::vector<SignaturePtr> body;
  std::size_t hash = 0;
};

bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

struct Event {
  SignaturePtr signature;
  Ordinal duration;
  std::uint32_t min_state = 0;        // least state at any time in the span
  std::vector<Motion> motion;         // per tape
  std::vector<std::uint8_t> min_cell;  // per tape, head cell; stationary tapes only
  std::vector<bool> clean;             // per tape, no cell changed value
  int level = 0;
};

Event step_event(const Configuration& before, const Program& p);

class History {
 public:
  struct Entry {
    Configuration start;
    Ordinal start_time;
    Event event;
  };

  History(Configuration start, Ordinal time) : end_(std::move(start)), end_time_(std::move(time)) {}

  void push(Event e, Configuration end, Ordinal end_time);
  // Replaces the last `count` events by one event ending at `end`.
  void collapse(std::size_t count, Event e, Configuration end, Ordinal end_time);
  void trim(std::size_t max_events);

  std::size_t size() const { return entries_.size(); }
  const Entry& entry(std::size_t i) const { return entries_[i]; }
  // Boundary i is the configuration before event i; boundary size() is end().
  const Configuration& boundary(std::size_t i) const;
  const Ordinal& boundary_time(std::size_t i) const;
  const Configuration& end() const { return end_; }
  const Ordinal& end_time() const { return end_time_; }

 private:
  std::deque<Entry> entries_;
  Configuration end_;
  Ordinal end_time_;
};

struct LimitJump {
  enum class Status { jumped, no_pattern, undetermined };
  Status status = Status::no_pattern;
  Configuration config;
  Ordinal time;
  std::size_t period = 0;  // events per repeated block
  int level = 0;
  Event event;             // summary of the whole omega-fold repetition
  // The limit configuration repeats the view of the jump's start, so the
  // same jump recurs at every later limit and the machine never halts.
  bool eternal = false;
  std::string reason;
};

// Looks for a block of events at the end of the history that repeats
// omega times. Requires two observed repetitions.
LimitJump limit_jump(const History& history, const Program& p, const SimulationLimits& limits);

// ---------------------------------------------------------------------------

class RunObserver {
 public:
  virtual ~RunObserver() = default;
  virtual void on_step(const Ordinal& /*time*/, const Configuration& /*c*/) {}
  virtual void on_jump(const LimitJump& /*jump*/) {}
};

// Writes `t=<ordinal> state=<q> heads=<h0,h1,...>` per event and
// `JUMP period=<n> to t=<ordinal>` before each limit stage.
class TraceWriter : public RunObserver {
 public:
  TraceWriter(std::ostream& os, const Program& p) : os_(os), program_(p) {}
  void on_step(const Ordinal& time, const Configuration& c) override;
  void on_jump(const LimitJump& jump) override;

 private:
  void line(const Ordinal& time, const Configuration& c);
  std::ostream& os_;
  const Program& program_;
};

// Runs until halt, until the clock reaches `budget`, or until the limit
// behaviour cannot be determined. budget must be at least 1.
RunOutcome run(const Program& p, const Word& input, const Ordinal& budget,
               const SimulationLimits& limits = {}, RunObserver* observer = nullptr);

}  // namespace otm
