#ifndef REGEQ_TESTS_SUPPORT_GEN_HPP
#define REGEQ_TESTS_SUPPORT_GEN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "regeq/syntax.hpp"
#include "regeq/unicode.hpp"

namespace regeq::test {

// Seeded expression generator. All suites construct it with an explicit
// seed so failures replay exactly.
class ExpGen {
 public:
  ExpGen(std::uint64_t seed, Alphabet alphabet)
      : rng_(seed), alphabet_(std::move(alphabet)) {}

  std::mt19937_64& rng() { return rng_; }

  // Random expression with size(e) <= max_size (max_size >= 1). Leaves are
  // deliberately rare at inner nodes so large budgets yield large
  // expressions instead of collapsing after a step or two.
  Exp random_exp(std::size_t max_size) {
    if (max_size <= 1) return leaf();
    if (max_size == 2) return pick(2) == 0 ? Exp::star(leaf()) : leaf();
    switch (pick(8)) {
      case 0:
        return pick(2) == 0 ? Exp::zero() : Exp::one();
      case 1:
        return leaf_char();
      case 2:
      case 3:
        return Exp::star(random_exp(max_size - 1));
      default: {
        // Split the remaining budget between the two children.
        std::size_t budget = max_size - 1;
        std::size_t left = 1 + pick(budget - 1);
        Exp l = random_exp(left);
        Exp r = random_exp(budget - left);
        return pick(2) == 0 ? Exp::plus(std::move(l), std::move(r))
                            : Exp::comp(std::move(l), std::move(r));
      }
    }
  }

  // A language-equal variant of e, built from one randomly chosen
  // semantics-preserving rewrite.
  Exp equivalent_variant(const Exp& e) {
    switch (pick(7)) {
      case 0:
        return Exp::plus(e, e);
      case 1:
        return Exp::plus(e, Exp::zero());
      case 2:
        return Exp::comp(Exp::one(), e);
      case 3:
        return Exp::comp(e, Exp::one());
      case 4:
        if (e.kind() == Exp::Kind::Plus) return Exp::plus(e.right(), e.left());
        return Exp::plus(Exp::zero(), e);
      case 5:
        if (e.kind() == Exp::Kind::Star) return Exp::star(e);  // (e*)* = e*
        return normalize(e);
      default:
        if (e.kind() == Exp::Kind::Star) {
          // x* = 1 + x x*
          return Exp::plus(Exp::one(), Exp::comp(e.inner(), e));
        }
        return normalize(e);
    }
  }

  Word random_word(std::size_t max_len) {
    Word w;
    std::size_t len = pick(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(alphabet_[pick(alphabet_.size())]);
    }
    return w;
  }

 private:
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  Exp leaf() {
    switch (pick(4)) {
      case 0:
        return Exp::zero();
      case 1:
        return Exp::one();
      default:
        return leaf_char();
    }
  }

  Exp leaf_char() { return Exp::chr(alphabet_[pick(alphabet_.size())]); }

  std::mt19937_64 rng_;
  Alphabet alphabet_;
};

inline Alphabet ab() { return {Symbol{U'a'}, Symbol{U'b'}}; }

// Word to UTF-8, ε for the empty word. For diagnostics.
inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (Symbol s : w) unicode::encode_utf8(s.value(), out);
  return out;
}

// UTF-8 string to Word, one Symbol per scalar. For test literals.
inline Word word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    auto dec = unicode::decode_utf8(text, i);
    w.push_back(Symbol{dec.scalar});
    i += dec.length;
  }
  return w;
}

}  // namespace regeq::test

#endif  // REGEQ_TESTS_SUPPORT_GEN_HPP
