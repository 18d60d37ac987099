#ifndef REGEQ_AUTOMATON_HPP
#define REGEQ_AUTOMATON_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "regeq/syntax.hpp"

namespace regeq {

// A finite automaton over expression states. State 0 is the start state;
// states are indices into a table that is total over the alphabet.
class Dfa {
 public:
  Dfa(std::vector<Exp> states, Alphabet alphabet,
      std::vector<std::vector<std::size_t>> transitions,
      std::vector<bool> accepting);

  std::size_t state_count() const { return states_.size(); }
  const Exp& state(std::size_t i) const { return states_.at(i); }
  const Alphabet& alphabet() const { return alphabet_; }

  // Transition target from state `i` on letter `a`. Throws
  // std::invalid_argument if `a` is not in the alphabet.
  std::size_t target(std::size_t i, Symbol a) const;

  bool is_accepting(std::size_t i) const { return accepting_.at(i); }
  std::vector<std::size_t> accepting_states() const;

  // Runs the automaton from the start state. Throws std::invalid_argument
  // if the word uses a letter outside the alphabet.
  bool accepts(const Word& w) const;

  // Graphviz rendering: nodes s0..sN labelled with the printed state
  // expressions, accepting states drawn doublecircle, an unlabelled arrow
  // marking the start state, edges labelled with their letter.
  std::string to_dot(std::string_view root_label) const;

  bool operator==(const Dfa& other) const;

 private:
  std::vector<Exp> states_;
  Alphabet alphabet_;
  std::vector<std::vector<std::size_t>> transitions_;  // [state][letter index]
  std::vector<bool> accepting_;
};

// Builds the automaton of simplified derivatives reachable from
// normalize(e), breadth-first, expanding letters in alphabet order. State 0
// is normalize(e) and a state is accepting iff its expression is nullable.
// Throws std::invalid_argument if `state_cap` is 0 or the alphabet is
// invalid; throws BudgetError (carrying the number of states discovered so
// far) if more than `state_cap` states are found.
Dfa explore(const Exp& e, const Alphabet& alphabet, std::size_t state_cap);

}  // namespace regeq

#endif  // REGEQ_AUTOMATON_HPP
