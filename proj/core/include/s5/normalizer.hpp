// Transformation of arbitrary S5 formulas into an equi-satisfiable S5NF.
#pragma once

#include <map>
#include <string>

#include "s5/formula.hpp"
#include "s5/s5nf.hpp"

namespace s5 {

/// Produces atoms "__n1", "__n2", ... that cannot clash with parsed input.
class FreshGen {
 public:
  explicit FreshGen(unsigned start = 0) : counter_(start) {}

  Atom next();
  unsigned count() const { return counter_; }
  static std::string prefix();

 private:
  unsigned counter_;
};

/// Negation normal form: negations only above atoms, double negations
/// removed, ~box/~dia turned into dia~/box~. Implications and equivalences
/// must be desugared first.
Formula to_nnf(const Formula& f);

/// On NNF input: collapses chains of modal operators to the innermost one,
/// distributes box over conjunction and dia over disjunction, and lifts
/// modal disjuncts out of box bodies and modal conjuncts out of dia bodies.
Formula push_modalities(const Formula& f);

/// On NNF input with modalities pushed: replaces each conjunction nested in
/// a disjunction (and each disjunction nested in a conjunction under dia) by
/// a fresh atom p, conjoining the one-sided definitions box(~p | ...) at top
/// level. Syntactically identical subformulas share one atom. The result
/// satisfies is_s5nf.
Formula name_nested(const Formula& f, FreshGen& gen);

/// Full pipeline: desugar, NNF, push modalities, name nested subformulas,
/// build the S5NF. Satisfiability is preserved.
S5NF normalize(const Formula& f);

/// Same as normalize, returning the S5-NF formula before the S5NF value is
/// built (no pruning, no id merging).
Formula normal_form_formula(const Formula& f, FreshGen& gen);

}  // namespace s5
