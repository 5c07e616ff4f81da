#pragma once

#include <stdexcept>
#include <string>

#include "wfomc/problem.hpp"

namespace wfomc {

/// A formula shape the reductions cannot express in the target fragment.
class UnsupportedFormula : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Negation normal form: Implies/Iff eliminated, negations only on atoms.
/// Negated counting quantifiers flip their comparator (=k becomes a disjunction).
Formula to_nnf(const Formula& f);

/// Expands Acyclic(R, Source, Sink) into Acyclic(R) plus the defining sentences
///   forall x. Source(x) <-> ~exists y. R(y,x)
///   forall x. Sink(x)   <-> ~exists y. R(x,y)
Problem lower_source_sink(Problem p);

/// Replaces every top-level conjunct exists[<cmp>k] v. phi(v) with a fresh unary
/// predicate P, the definition forall v. P(v) <-> phi(v) and the constraint
/// |P| <cmp> k. Counting quantifiers in any other position are rejected.
/// Expects NNF input; the added definitions are in NNF.
Problem lower_counting(Problem p);

/// Eliminates every existential quantifier and every quantifier that is not part
/// of a leading forall-forall prefix, producing forall x. forall y. phi(x,y) with phi
/// quantifier-free. Existentials become fresh "$skolem" predicates weighted (1, -1);
/// nested quantified subformulas get a defining "$aux" predicate first. Sentence-level
/// existentials become |P| >= 1 constraints. Expects NNF input without counting
/// quantifiers. Count preservation assumes a non-empty domain.
Problem skolemize(Problem p);

/// lower_source_sink, to_nnf, lower_counting, skolemize.
Problem normalize(Problem p);

/// True when the sentence is forall x. forall y. phi (either order) with phi quantifier-free.
bool is_universal_fo2(const Formula& sentence);

/// The quantifier-free matrix of a sentence accepted by is_universal_fo2.
Formula universal_matrix(const Formula& sentence);

}  // namespace wfomc
