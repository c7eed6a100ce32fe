#include "otm/program.hpp"

#include <stdexcept>

namespace otm {

Program::Program(std::size_t states, std::size_t tapes, std::vector<Transition> table,
                 std::vector<std::string> state_names)
    : states_(states), tapes_(tapes), table_(std::move(table)), names_(std::move(state_names)) {
  if (states_ < 2) throw std::invalid_argument("a program needs a start and a halt state");
  if (tapes_ < 2 || tapes_ > kMaxTapes) {
    throw std::invalid_argument("tape count must be between 2 and " + std::to_string(kMaxTapes));
  }
  if (table_.size() != (states_ - 1) * read_masks()) {
    throw std::invalid_argument("transition table is not total on non-halt states");
  }
  for (const Transition& t : table_) {
    if (t.next >= states_) throw std::invalid_argument("transition to unknown state");
    if (t.write >= read_masks()) throw std::invalid_argument("write vector wider than tape count");
    if (t.moves.size() != tapes_) throw std::invalid_argument("move vector length differs from tape count");
  }
  if (names_.empty()) {
    for (std::size_t s = 0; s < states_; ++s) {
      names_.push_back(s + 1 == states_ ? "qH" : "q" + std::to_string(s));
    }
  }
  if (names_.size() != states_) throw std::invalid_argument("state name count differs from state count");
}

Program Program::null_program() {
  std::vector<Transition> table;
  for (std::uint32_t read = 0; read < 4; ++read) {
    table.push_back(Transition{1, read & ~1U, {Move::stay, Move::stay}});
  }
  return Program(2, 2, std::move(table));
}

const Transition& Program::rule(std::uint32_t state, std::uint32_t read) const {
  if (state >= halt()) throw std::out_of_range("no transitions out of the halt state");
  return table_[state * read_masks() + read];
}

}  // namespace otm
