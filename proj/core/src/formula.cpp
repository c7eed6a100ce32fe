#include "otm/formula.hpp"

#include <algorithm>

namespace otm {

namespace fol {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

FormulaPtr member(std::string x, std::string y) {
  return make({Formula::Kind::member, std::move(x), std::move(y), nullptr, nullptr});
}
FormulaPtr equal(std::string x, std::string y) {
  return make({Formula::Kind::equal, std::move(x), std::move(y), nullptr, nullptr});
}
FormulaPtr negation(FormulaPtr f) { return make({Formula::Kind::negation, {}, {}, std::move(f), nullptr}); }
FormulaPtr conjunction(FormulaPtr f, FormulaPtr g) {
  return make({Formula::Kind::conjunction, {}, {}, std::move(f), std::move(g)});
}
FormulaPtr disjunction(FormulaPtr f, FormulaPtr g) {
  return make({Formula::Kind::disjunction, {}, {}, std::move(f), std::move(g)});
}
FormulaPtr implication(FormulaPtr f, FormulaPtr g) {
  return make({Formula::Kind::implication, {}, {}, std::move(f), std::move(g)});
}
FormulaPtr forall(std::string v, FormulaPtr f) {
  return make({Formula::Kind::forall, std::move(v), {}, std::move(f), nullptr});
}
FormulaPtr exists(std::string v, FormulaPtr f) {
  return make({Formula::Kind::exists, std::move(v), {}, std::move(f), nullptr});
}
FormulaPtr iff(const FormulaPtr& f, const FormulaPtr& g) {
  return conjunction(implication(f, g), implication(g, f));
}

FormulaPtr extensionality() {
  auto same_members = forall("z", iff(member("z", "x"), member("z", "y")));
  return forall("x", forall("y", implication(same_members, equal("x", "y"))));
}

FormulaPtr pairing() {
  return forall("x", forall("y", exists("z", conjunction(member("x", "z"), member("y", "z")))));
}

FormulaPtr irreflexivity() { return forall("x", negation(member("x", "x"))); }

}  // namespace fol

int quantifier_count(const Formula& f) {
  int n = (f.kind == Formula::Kind::forall || f.kind == Formula::Kind::exists) ? 1 : 0;
  if (f.a) n += quantifier_count(*f.a);
  if (f.b) n += quantifier_count(*f.b);
  return n;
}

int membership_count(const Formula& f) {
  int n = f.kind == Formula::Kind::member ? 1 : 0;
  if (f.a) n += membership_count(*f.a);
  if (f.b) n += membership_count(*f.b);
  return n;
}

int quantifier_depth(const Formula& f) {
  int inner = 0;
  if (f.a) inner = quantifier_depth(*f.a);
  if (f.b) inner = std::max(inner, quantifier_depth(*f.b));
  bool q = f.kind == Formula::Kind::forall || f.kind == Formula::Kind::exists;
  return inner + (q ? 1 : 0);
}

std::set<std::string> free_variables(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::member:
    case Formula::Kind::equal:
      return {f.left, f.right};
    case Formula::Kind::forall:
    case Formula::Kind::exists: {
      auto vars = free_variables(*f.a);
      vars.erase(f.left);
      return vars;
    }
    default: {
      auto vars = free_variables(*f.a);
      if (f.b) vars.merge(free_variables(*f.b));
      return vars;
    }
  }
}

std::string to_string(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::member:
      return "(in " + f.left + " " + f.right + ")";
    case Formula::Kind::equal:
      return "(eq " + f.left + " " + f.right + ")";
    case Formula::Kind::negation:
      return "(not " + to_string(*f.a) + ")";
    case Formula::Kind::conjunction:
      return "(and " + to_string(*f.a) + " " + to_string(*f.b) + ")";
    case Formula::Kind::disjunction:
      return "(or " + to_string(*f.a) + " " + to_string(*f.b) + ")";
    case Formula::Kind::implication:
      return "(implies " + to_string(*f.a) + " " + to_string(*f.b) + ")";
    case Formula::Kind::forall:
      return "(all " + f.left + " " + to_string(*f.a) + ")";
    case Formula::Kind::exists:
      return "(ex " + f.left + " " + to_string(*f.a) + ")";
  }
  return {};
}

}  // namespace otm
