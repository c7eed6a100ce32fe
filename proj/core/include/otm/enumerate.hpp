#pragma once

// The program enumeration P_0, P_1, ...
//
// An index is read as a bit string: its binary expansion without the
// leading 1. The string holds Elias-gamma coded (states - 1) and
// (tapes - 1), then one row per (non-halt state, read mask):
//
//   0                     default row: halt, write back what was read, stay
//   1 next write moves    explicit row; next in ceil(log2 states) bits,
//                         write in `tapes` bits, moves as a base-3 number
//                         (digit t: 0 left, 1 stay, 2 right) in
//                         ceil(log2 3^tapes) bits
//
// An explicit row equal to the default row is malformed, so the encoding
// is unique. Index 0 and every malformed index denote the null program.

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "otm/program.hpp"

namespace otm {

using ProgramIndex = boost::multiprecision::cpp_int;

// nullopt when the index does not decode to a well-formed program.
std::optional<Program> decode_program(const ProgramIndex& index);

Program enumerate(const ProgramIndex& index);

ProgramIndex encode(const Program& p);

ProgramIndex parse_index(const std::string& text);

}  // namespace otm
