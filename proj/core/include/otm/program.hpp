#pragma once

// Multitape OTM programs: one shared state, an independent head per tape.
//
// States are numbered 0..n-1; state 0 is the start state and state n-1 the
// halt state. The numbering is also the order used by the liminf rule.
// Reads and writes are bitmasks with bit t standing for tape t.

#include <cstdint>
#include <string>
#include <vector>

namespace otm {

enum class Move : std::uint8_t { left, stay, right };

struct Transition {
  std::uint32_t next = 0;
  std::uint32_t write = 0;
  std::vector<Move> moves;

  friend bool operator==(const Transition&, const Transition&) = default;
};

class Program {
 public:
  static constexpr std::size_t kMaxTapes = 8;

  // Throws std::invalid_argument unless states >= 2, 2 <= tapes <= kMaxTapes
  // and the table has one well-formed row per (non-halt state, read mask).
  Program(std::size_t states, std::size_t tapes, std::vector<Transition> table,
          std::vector<std::string> state_names = {});

  // Halts after one step, writing 0 at cell 0 of tape 0 (rejects).
  static Program null_program();

  std::size_t state_count() const { return states_; }
  std::size_t tape_count() const { return tapes_; }
  std::uint32_t start() const { return 0; }
  std::uint32_t halt() const { return static_cast<std::uint32_t>(states_ - 1); }
  std::uint32_t read_masks() const { return 1U << tapes_; }

  const Transition& rule(std::uint32_t state, std::uint32_t read) const;
  const std::vector<Transition>& table() const { return table_; }
  const std::string& state_name(std::uint32_t state) const { return names_[state]; }

  // Tables and sizes only; state names are presentation.
  friend bool operator==(const Program& a, const Program& b) {
    return a.states_ == b.states_ && a.tapes_ == b.tapes_ && a.table_ == b.table_;
  }

 private:
  std::size_t states_;
  std::size_t tapes_;
  std::vector<Transition> table_;
  std::vector<std::string> names_;
};

}  // namespace otm
