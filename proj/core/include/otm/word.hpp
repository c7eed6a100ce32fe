#pragma once

// Transfinite binary words, run-length encoded with ordinal run lengths.

#include <cstdint>
#include <string>
#include <vector>

#include "otm/ordinal.hpp"

namespace otm {

struct Run {
  Ordinal length;
  std::uint8_t bit = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

class Word {
 public:
  Word() = default;
  // Throws std::invalid_argument unless every run is nonempty and adjacent
  // runs carry distinct bits.
  static Word from_runs(std::vector<Run> runs);
  static Word uniform(const Ordinal& length, std::uint8_t bit);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  const Ordinal& length() const { return length_; }

  // Appends, merging with the last run when the bits agree.
  void append(const Ordinal& length, std::uint8_t bit);
  void append(const Word& other);

  // Bit at a position; positions at or beyond length() read as 0.
  std::uint8_t at(const Ordinal& pos) const;
  // The first n symbols, padded with 0s when n exceeds length().
  Word prefix(const Ordinal& n) const;
  // Symbols from position `from` onwards (empty when from >= length()).
  Word suffix_from(const Ordinal& from) const;
  // suffix_from(from).prefix(n).
  Word slice(const Ordinal& from, const Ordinal& n) const;
  // Drops a final run of 0s.
  Word trimmed() const;

  friend bool operator==(const Word& a, const Word& b) { return a.runs_ == b.runs_; }

 private:
  std::vector<Run> runs_;
  Ordinal length_;
};

// Text form "1^3,0,1^(w^2)"; the empty word prints as "".
std::string to_string(const Word& w);

// A class-length tape: an explicit word followed by 0s forever. Stored
// trimmed, so equal tapes compare equal.
class Tape {
 public:
  Tape() = default;
  explicit Tape(const Word& contents) : cells_(contents.trimmed()) {}

  std::uint8_t read(const Ordinal& pos) const { return cells_.at(pos); }
  void write(const Ordinal& pos, std::uint8_t bit) { fill(pos, Ordinal(1), bit); }
  // Overwrites [from, from + n) with a uniform bit.
  void fill(const Ordinal& from, const Ordinal& n, std::uint8_t bit);
  Word slice(const Ordinal& from, const Ordinal& n) const { return cells_.slice(from, n); }
  // True iff every cell at or beyond pos is 0.
  bool blank_from(const Ordinal& pos) const { return cells_.length() <= pos; }
  const Word& contents() const { return cells_; }

  friend bool operator==(const Tape&, const Tape&) = default;

 private:
  Word cells_;
};

}  // namespace otm
