#pragma once

// Executable diagonal languages over transfinite binary words.
//
//   X      : P_{|x|_0}(x) does not accept within |x|_1^|x|_1 * |x|_1 steps
//   L      : P_{i(w)}(w) does not accept within |w| * 2 steps
//   L_alpha: P_{i(w)}(w) does not accept within |w|^alpha * |w| steps
//
// where |x| = w * |x|_1 + |x|_0 and i(w) reads the leading 1s of w.
// Each decider runs the designated program under its budget and flips the
// verdict. When the inner run cannot be resolved the answer is
// undetermined rather than guessed.

#include <optional>
#include <string>
#include <vector>

#include "otm/enumerate.hpp"
#include "otm/formula.hpp"
#include "otm/machine.hpp"
#include "otm/modelcheck.hpp"

namespace otm {

enum class Verdict { in, out, undetermined };

std::string to_string(Verdict v);

struct Membership {
  Verdict value = Verdict::undetermined;
  std::optional<Ordinal> witness_time;  // when the inner run resolved
  Ordinal budget;
  ProgramIndex index;
  RunOutcome inner;
};

// Length of the all-1 prefix of the first w symbols, or 0 when those are
// all 1. Throws std::invalid_argument if |w| < w.
std::uint64_t i_of(const Word& w);

struct LadnerInstance {
  Word x;
  std::uint64_t index = 0;  // |x|_0
  Ordinal scale;            // |x|_1
};

// Throws std::invalid_argument if |x| < w.
LadnerInstance ladner_instance(const Word& x);

Ordinal ladner_budget(const Ordinal& scale);
Ordinal speedup_budget(const Ordinal& length);
Ordinal hierarchy_budget(const Ordinal& length, const Ordinal& alpha);

Membership decide_X(const Word& x, const SimulationLimits& limits = {});
Membership decide_L_speedup(const Word& w, const SimulationLimits& limits = {});
// Requires alpha >= 1.
Membership decide_L_hierarchy(const Word& w, const Ordinal& alpha, const SimulationLimits& limits = {});

// Finite-fragment checking of a certificate for membership in X. The
// requirement that the coded model believes the diagonal statement is not
// checked.
struct CertificateOptions {
  // The well-founded part must have at least this height.
  Ordinal min_height;
};

struct CertificateVerdict {
  bool accepted = false;
  std::string clause;  // "pre", "a", "b", "c" or "d" when rejected
  std::string reason;
  std::vector<SentenceReport> reports;
  Ordinal height;
};

CertificateVerdict verify_certificate(const Word& x, const CodedStructure& code,
                                      const std::vector<FormulaPtr>& axioms,
                                      const CertificateOptions& options = {});

}  // namespace otm
