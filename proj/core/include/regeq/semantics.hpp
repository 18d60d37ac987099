#ifndef REGEQ_SEMANTICS_HPP
#define REGEQ_SEMANTICS_HPP

#include "regeq/language.hpp"
#include "regeq/syntax.hpp"

namespace regeq {

// Compositional semantics: maps each constructor to the matching language
// operation by structural induction.
Lang denotational(const Exp& e);

// Whether the language of `e` contains the empty word, computed on the
// syntax alone.
bool nullable(const Exp& e);

// Syntactic left derivative: the language of derivative(e, a) is the
// residual of the language of `e` after `a`. Returned unsimplified.
Exp derivative(const Exp& e, Symbol a);

// normalize(derivative(e, a)). Under this form every expression reaches
// only finitely many distinct derivatives.
Exp normalized_derivative(const Exp& e, Symbol a);

// Behavioural semantics: the language whose empty-word bit is nullable(e)
// and whose residual at `a` is the semantics of derivative(e, a).
Lang operational(const Exp& e);

}  // namespace regeq

#endif  // REGEQ_SEMANTICS_HPP
