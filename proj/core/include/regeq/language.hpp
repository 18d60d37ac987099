#ifndef REGEQ_LANGUAGE_HPP
#define REGEQ_LANGUAGE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "regeq/syntax.hpp"

namespace regeq {

// A formal language, represented behaviourally: a language is exactly an
// "accepts the empty word" bit together with one residual language per
// letter. Values are lazy and potentially infinite-state; each cell's
// residuals are computed on first demand and memoized, so repeated walks
// take each step once. All operations are thread-safe.
//
// The structural constructors (singleton, plus, comp, star) intern their
// cells: equal combinator trees built from identical parts share one cell,
// so identity comparisons see through reconstruction. Residual memos hold
// weak references — a residual lives exactly as long as someone uses it —
// which keeps the interned graph acyclic and memory bounded by live roots.
class Lang {
 public:
  using Step = std::function<Lang(Symbol)>;

  // Whether the language contains the empty word.
  bool eps() const;

  // The residual language after consuming `a`: { w | a w ∈ L }.
  Lang delta(Symbol a) const;

  // Address of the underlying cell. Two Langs with equal identity are the
  // same object and therefore denote the same language. The address is
  // stable while the value lives; hold a Lang to keep its key meaningful.
  const void* identity() const;

  static Lang zero();                    // {}
  static Lang one();                     // {ε}
  static Lang singleton(Symbol a);       // {a}
  static Lang plus(Lang l1, Lang l2);    // union
  static Lang comp(Lang l1, Lang l2);    // concatenation
  static Lang star(Lang l);              // iteration

  // General constructor: a language from its empty-word bit and residual
  // map. `step` must be pure; it is invoked at most once per symbol.
  static Lang unfold(bool eps, Step step);

  struct Cell;  // opaque behavior cell, defined in language.cpp

 private:
  explicit Lang(std::shared_ptr<Cell> cell) : cell_(std::move(cell)) {}

  std::shared_ptr<Cell> cell_;
};

// Word membership by iterated residuation.
bool member(const Lang& l, const Word& w);

// All members of length at most `max_len`, drawing letters from `alphabet`,
// ordered by length and then lexicographically by alphabet position.
std::vector<Word> enumerate(const Lang& l, const Alphabet& alphabet,
                            std::size_t max_len);

}  // namespace regeq

#endif  // REGEQ_LANGUAGE_HPP
