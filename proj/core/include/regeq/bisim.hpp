#ifndef REGEQ_BISIM_HPP
#define REGEQ_BISIM_HPP

#include <cstddef>
#include <functional>
#include <optional>

#include "regeq/language.hpp"
#include "regeq/syntax.hpp"

namespace regeq {

// Bounded behavioural equivalence. bisimilar(0, ...) is vacuously true;
// for k > 0 it requires equal empty-word bits and, for every letter of the
// alphabet, bisimilarity of the residuals at depth k - 1. Languages that
// are bisimilar at depth k agree on membership of all words shorter
// than k.
bool bisimilar(std::size_t depth, const Lang& l1, const Lang& l2,
               const Alphabet& alphabet);

// Law checks for the bounded relation. Each returns whether the law holds
// on the given instance (implications are true when the premise fails).
bool check_reflexivity(std::size_t depth, const Lang& l,
                       const Alphabet& alphabet);
bool check_symmetry(std::size_t depth, const Lang& l1, const Lang& l2,
                    const Alphabet& alphabet);
bool check_transitivity(std::size_t depth, const Lang& l1, const Lang& l2,
                        const Lang& l3, const Alphabet& alphabet);

// Congruence checks: if the paired arguments are bisimilar at `depth`, the
// combined languages must be too.
bool check_plus_congruence(std::size_t depth, const Lang& l1a,
                           const Lang& l1b, const Lang& l2a, const Lang& l2b,
                           const Alphabet& alphabet);
bool check_comp_congruence(std::size_t depth, const Lang& l1a,
                           const Lang& l1b, const Lang& l2a, const Lang& l2b,
                           const Alphabet& alphabet);
bool check_star_congruence(std::size_t depth, const Lang& l1, const Lang& l2,
                           const Alphabet& alphabet);

// A candidate semantics: any map from expressions to languages.
using SemanticMap = std::function<Lang(const Exp&)>;

// Whether `f` respects the expression constructors at `e`, up to depth-
// bounded bisimilarity: f(e) must be bisimilar to the language built by
// applying f to the immediate subexpressions and combining the results.
bool is_algebra_homomorphism_at(const SemanticMap& f, const Exp& e,
                                std::size_t depth, const Alphabet& alphabet);

// Whether `f` respects observations at `e`: f(e).eps() == nullable(e) and,
// for every letter a, f(e).delta(a) is bisimilar to f(derivative(e, a)) at
// the given depth.
bool is_coalgebra_homomorphism_at(const SemanticMap& f, const Exp& e,
                                  std::size_t depth, const Alphabet& alphabet);

enum class Agreement { Agree, Disagree, PreconditionFailed };

// Tests the uniqueness property of behaviour-respecting maps: if both `f`
// and `g` respect observations on every expression reachable from `e` by
// derivatives within `depth` steps (checked at the remaining depth), then
// f(e) and g(e) must be bisimilar at `depth`. Returns PreconditionFailed
// when either map fails its homomorphism check on the reachable set,
// otherwise Agree/Disagree for the bisimilarity verdict.
Agreement homomorphisms_agree(const SemanticMap& f, const SemanticMap& g,
                              const Exp& e, std::size_t depth,
                              const Alphabet& alphabet);

struct EquivResult {
  enum class Verdict { Equivalent, Distinguished };
  Verdict verdict;
  // A shortest word on which the two languages disagree; present exactly
  // when verdict == Distinguished.
  std::optional<Word> witness;
};

inline constexpr std::size_t kDefaultPairCap = 100000;

// Decides language equivalence of two expressions by exploring pairs of
// simplified derivatives. Terminates on all inputs; throws BudgetError if
// more than `pair_cap` pairs would be enqueued.
EquivResult decide_equivalence(const Exp& e1, const Exp& e2,
                               const Alphabet& alphabet,
                               std::size_t pair_cap = kDefaultPairCap);

}  // namespace regeq

#endif  // REGEQ_BISIM_HPP
