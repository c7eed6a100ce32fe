#pragma once

// Text formats: ordinal literals, word literals, program assembly,
// structure files and prefix-syntax formulas. Every parser reports the
// byte offset of the first problem.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "otm/formula.hpp"
#include "otm/modelcheck.hpp"
#include "otm/program.hpp"
#include "otm/word.hpp"

namespace otm {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Accepts exactly the printer's output: "w^2*3+w*5+7", "w^(w+1)", "0".
// Non-canonical spellings such as "w+w^2", "w*1" or "007" are rejected.
Ordinal parse_ordinal(std::string_view text);

// "1^3,0,1^(w^2)"; a run without exponent has length 1 and the empty
// string is the empty word. Adjacent runs with equal bits are merged.
Word parse_word(std::string_view text);

// Line-oriented assembly:
//
//   #tapes 2
//   #start q0
//   #halt qH
//   q0 1,0 -> q1 0,0 R,S
//
// Read and write vectors list tape 0 first. ';' starts a comment. The
// table must be total on non-halt states. States are renumbered with the
// start state first, the halt state last and the rest in order of their
// first row, so format_program and parse_program are inverse. #start defaults to the first state named, #halt to qH.
Program parse_program(std::string_view text);
std::string format_program(const Program& p);

// "bound <ordinal>" followed by "edge <ordinal> <ordinal>" lines.
// "element <ordinal>" adds an isolated element. Without a bound line the
// bound is the least ordinal above every code.
CodedStructure parse_structure(std::string_view text);
std::string format_structure(const CodedStructure& s);

// Prefix syntax: (all x F), (ex x F), (not F), (and F G ...), (or F G ...),
// (implies F G), (iff F G), (in x y), (eq x y). n-ary and/or fold to the
// left.
FormulaPtr parse_formula(std::string_view text);
// Any number of formulas separated by whitespace; ';' starts a comment.
std::vector<FormulaPtr> parse_formulas(std::string_view text);

}  // namespace otm
