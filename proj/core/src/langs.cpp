#include "otm/langs.hpp"

#include <stdexcept>

namespace otm {

namespace {

void require_infinite(const Word& w, const char* what) {
  if (w.length() < Ordinal::omega()) {
    throw std::invalid_argument(std::string(what) + " needs an input of length >= w, got " + to_string(w.length()));
  }
}

Membership decide(const ProgramIndex& index, const Word& input, const Ordinal& budget,
                  const SimulationLimits& limits) {
  Membership m;
  m.index = index;
  m.budget = budget;
  m.inner = run(enumerate(index), input, budget, limits);
  switch (m.inner.kind) {
    case OutcomeKind::halted:
      m.value = m.inner.accept == 1 ? Verdict::out : Verdict::in;
      m.witness_time = m.inner.time;
      break;
    case OutcomeKind::out_of_budget:
      m.value = Verdict::in;
      m.witness_time = m.inner.time;
      break;
    case OutcomeKind::limit_undetermined:
      m.value = Verdict::undetermined;
      break;
  }
  return m;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::in:
      return "IN";
    case Verdict::out:
      return "OUT";
    case Verdict::undetermined:
      return "UNDETERMINED";
  }
  return "?";
}

std::uint64_t i_of(const Word& w) {
  require_infinite(w, "i(w)");
  const Run& first = w.runs().front();
  if (first.bit == 0 || first.length >= Ordinal::omega()) return 0;
  return first.length.to_natural();
}

LadnerInstance ladner_instance(const Word& x) {
  require_infinite(x, "the Ladner language");
  CnfSplit split = cnf_split(x.length());
  return LadnerInstance{x, split.finite_part, split.quotient};
}

Ordinal ladner_budget(const Ordinal& scale) { return mul(pow(scale, scale), scale); }

Ordinal speedup_budget(const Ordinal& length) { return mul(length, Ordinal(2)); }

Ordinal hierarchy_budget(const Ordinal& length, const Ordinal& alpha) { return mul(pow(length, alpha), length); }

Membership decide_X(const Word& x, const SimulationLimits& limits) {
  LadnerInstance inst = ladner_instance(x);
  return decide(ProgramIndex(inst.index), x, ladner_budget(inst.scale), limits);
}

Membership decide_L_speedup(const Word& w, const SimulationLimits& limits) {
  std::uint64_t i = i_of(w);
  return decide(ProgramIndex(i), w, speedup_budget(w.length()), limits);
}

Membership decide_L_hierarchy(const Word& w, const Ordinal& alpha, const SimulationLimits& limits) {
  if (alpha.is_zero()) throw std::invalid_argument("hierarchy level alpha must be at least 1");
  std::uint64_t i = i_of(w);
  return decide(ProgramIndex(i), w, hierarchy_budget(w.length(), alpha), limits);
}

CertificateVerdict verify_certificate(const Word& x, const CodedStructure& code, const std::vector<FormulaPtr>& axioms,
                                      const CertificateOptions& options) {
  CertificateVerdict v;
  auto reject = [&](std::string clause, std::string reason) {
    v.accepted = false;
    v.clause = std::move(clause);
    v.reason = std::move(reason);
    return v;
  };

  const Ordinal square = mul(x.length(), x.length());
  if (code.bound > square) {
    return reject("pre", "code bound " + to_string(code.bound) + " exceeds |x|^2 = " + to_string(square));
  }
  if (auto defect = structure_defect(code)) return reject("a", *defect);

  v.reports = check_fragment(code, axioms);
  for (const SentenceReport& r : v.reports) {
    if (!r.holds) return reject("b", "sentence " + std::to_string(r.index) + " fails: " + to_string(*axioms[r.index]));
  }

  v.height = ordinal_height(code);
  if (v.height < options.min_height) {
    return reject("c", "well-founded part has height " + to_string(v.height) + ", below " +
                           to_string(options.min_height));
  }

  // Every ordinal below the height must be represented by itself.
  const auto ranks = wf_ranks(code);
  for (std::uint64_t iota = 0; Ordinal(iota) < v.height; ++iota) {
    auto it = ranks.find(Ordinal(iota));
    if (it == ranks.end()) {
      return reject("d", "ordinal " + std::to_string(iota) + " is not an element of the well-founded part");
    }
    if (it->second != Ordinal(iota)) {
      return reject("d", "element " + std::to_string(iota) + " has rank " + to_string(it->second));
    }
  }
  v.accepted = true;
  return v;
}

}  // namespace otm
