#include "regeq/automaton.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "regeq/errors.hpp"
#include "regeq/semantics.hpp"
#include "regeq/unicode.hpp"

namespace regeq {

Dfa::Dfa(std::vector<Exp> states, Alphabet alphabet,
         std::vector<std::vector<std::size_t>> transitions,
         std::vector<bool> accepting)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      accepting_(std::move(accepting)) {
  if (states_.empty() || transitions_.size() != states_.size() ||
      accepting_.size() != states_.size()) {
    throw std::invalid_argument("Dfa: inconsistent table sizes");
  }
  for (const auto& row : transitions_) {
    if (row.size() != alphabet_.size()) {
      throw std::invalid_argument("Dfa: transition row width mismatch");
    }
    for (std::size_t t : row) {
      if (t >= states_.size()) {
        throw std::invalid_argument("Dfa: transition target out of range");
      }
    }
  }
}

std::size_t Dfa::target(std::size_t i, Symbol a) const {
  for (std::size_t j = 0; j < alphabet_.size(); ++j) {
    if (alphabet_[j] == a) return transitions_.at(i)[j];
  }
  throw std::invalid_argument("symbol not in the automaton's alphabet: " +
                              unicode::encode_utf8(a.value()));
}

std::vector<std::size_t> Dfa::accepting_states() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < accepting_.size(); ++i) {
    if (accepting_[i]) out.push_back(i);
  }
  return out;
}

bool Dfa::accepts(const Word& w) const {
  std::size_t state = 0;
  for (Symbol a : w) state = target(state, a);
  return accepting_[state];
}

namespace {

std::string dot_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string Dfa::to_dot(std::string_view root_label) const {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(root_label) << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  start [shape=point, label=\"\"];\n";
  for (std::size_t i = 0; i < states_.size(); ++i) {
    out << "  s" << i << " [label=\"" << dot_escape(print(states_[i]))
        << "\", shape=" << (accepting_[i] ? "doublecircle" : "circle")
        << "];\n";
  }
  out << "  start -> s0;\n";
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (std::size_t j = 0; j < alphabet_.size(); ++j) {
      out << "  s" << i << " -> s" << transitions_[i][j] << " [label=\""
          << dot_escape(unicode::encode_utf8(alphabet_[j].value()))
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

bool Dfa::operator==(const Dfa& other) const {
  return states_ == other.states_ && alphabet_ == other.alphabet_ &&
         transitions_ == other.transitions_ && accepting_ == other.accepting_;
}

Dfa explore(const Exp& e, const Alphabet& alphabet, std::size_t state_cap) {
  require_valid_alphabet(alphabet);
  if (state_cap == 0) {
    throw std::invalid_argument("explore: state cap must be at least 1");
  }

  std::vector<Exp> states;
  std::unordered_map<Exp, std::size_t> index;
  std::vector<std::vector<std::size_t>> transitions;

  auto intern = [&](const Exp& x) {
    auto it = index.find(x);
    if (it != index.end()) return it->second;
    if (states.size() >= state_cap) {
      throw BudgetError("exploration exceeded the state cap", states.size());
    }
    std::size_t id = states.size();
    states.push_back(x);
    index.emplace(x, id);
    return id;
  };

  intern(normalize(e));
  // States are numbered in discovery order; the loop itself is the BFS
  // queue since every new state lands at the back.
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::vector<std::size_t> row;
    row.reserve(alphabet.size());
    for (Symbol a : alphabet) {
      row.push_back(intern(normalized_derivative(states[i], a)));
    }
    transitions.push_back(std::move(row));
  }

  std::vector<bool> accepting;
  accepting.reserve(states.size());
  for (const Exp& s : states) accepting.push_back(nullable(s));

  return Dfa(std::move(states), alphabet, std::move(transitions),
             std::move(accepting));
}

}  // namespace regeq
