#pragma once

// First-order formulas over one binary relation (written `in`) and equality.

#include <memory>
#include <set>
#include <string>

namespace otm {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { member, equal, negation, conjunction, disjunction, implication, forall, exists };

  Kind kind;
  std::string left;   // atoms: first variable; quantifiers: bound variable
  std::string right;  // atoms: second variable
  FormulaPtr a;
  FormulaPtr b;
};

namespace fol {

FormulaPtr member(std::string x, std::string y);
FormulaPtr equal(std::string x, std::string y);
FormulaPtr negation(FormulaPtr f);
FormulaPtr conjunction(FormulaPtr f, FormulaPtr g);
FormulaPtr disjunction(FormulaPtr f, FormulaPtr g);
FormulaPtr implication(FormulaPtr f, FormulaPtr g);
FormulaPtr forall(std::string v, FormulaPtr f);
FormulaPtr exists(std::string v, FormulaPtr f);
FormulaPtr iff(const FormulaPtr& f, const FormulaPtr& g);

// (all x (all y (implies (all z (iff (in z x) (in z y))) (eq x y))))
FormulaPtr extensionality();
// (all x (all y (ex z (and (in x z) (in y z)))))
FormulaPtr pairing();
// (all x (not (in x x)))
FormulaPtr irreflexivity();

}  // namespace fol

int quantifier_count(const Formula& f);
int membership_count(const Formula& f);
int quantifier_depth(const Formula& f);
std::set<std::string> free_variables(const Formula& f);

// Prefix syntax, e.g. "(all x (not (in x x)))".
std::string to_string(const Formula& f);

}  // namespace otm
