#pragma once

// Structures coded as sets of ordinals via the pairing function, and an
// instrumented first-order evaluator over them.
//
// A structure (S, E) with elements identified with ordinals is coded by
//   code = { pair(a, b) : a E b }.
// Evaluation searches the code exhaustively: every membership atom scans
// the whole code, charging one unit per probe, and each quantifier repeats
// its body once per domain element.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "otm/formula.hpp"
#include "otm/ordinal.hpp"

namespace otm {

struct CodedStructure {
  Ordinal bound;                 // every code member lies below it
  std::vector<Ordinal> domain;   // sorted, distinct, finite
  std::set<Ordinal> code;
};

using Edge = std::pair<Ordinal, Ordinal>;

// Elements labelled by strings; `assign` must be injective. The bound
// defaults to one more than the largest code member.
CodedStructure encode_structure(const std::vector<std::string>& domain,
                                const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::map<std::string, Ordinal>& assign,
                                std::optional<Ordinal> bound = std::nullopt);

// Same, with elements given directly as ordinals.
CodedStructure structure_from_edges(std::vector<Ordinal> domain, const std::vector<Edge>& edges,
                                    std::optional<Ordinal> bound = std::nullopt);

std::set<Edge> decode_edges(const CodedStructure& s);

// Empty when well formed, otherwise a description of the first defect.
std::optional<std::string> structure_defect(const CodedStructure& s);

// d in the cost bound d^n * c: the larger of the domain size and the code
// size, i.e. the length of the longest search the evaluator performs.
std::size_t size_parameter(const CodedStructure& s);

struct CostMeter {
  Ordinal basic_ops;
  std::uint64_t probes = 0;

  void charge(std::uint64_t n) {
    probes += n;
    basic_ops = add(basic_ops, Ordinal(n));
  }
};

using Environment = std::map<std::string, Ordinal>;

// Throws std::invalid_argument on a free variable missing from env.
bool eval(const Formula& phi, const CodedStructure& s, const Environment& env, CostMeter& meter);

struct SentenceReport {
  std::size_t index = 0;
  bool holds = false;
  Ordinal cost;
};

// Throws std::invalid_argument if some sentence has free variables.
std::vector<SentenceReport> check_fragment(const CodedStructure& s, const std::vector<FormulaPtr>& sentences);

// Elements from which no infinite descending chain ... b E a starts.
std::set<Ordinal> wf_part(const CodedStructure& s);

// Rank of each element of the well-founded part:
// rank(a) = sup { rank(b) + 1 : b E a }.
std::map<Ordinal, Ordinal> wf_ranks(const CodedStructure& s);

// Least ordinal above every rank in the well-founded part.
Ordinal ordinal_height(const CodedStructure& s);

}  // namespace otm
