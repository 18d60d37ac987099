#ifndef REGEQ_SYNTAX_HPP
#define REGEQ_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regeq {

// One letter of the alphabet: a Unicode scalar value.
class Symbol {
 public:
  constexpr explicit Symbol(char32_t value) : value_(value) {}

  constexpr char32_t value() const { return value_; }

  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  char32_t value_;
};

using Word = std::vector<Symbol>;
using Alphabet = std::vector<Symbol>;

// Throws std::invalid_argument if the alphabet is empty or has duplicates.
void require_valid_alphabet(const Alphabet& alphabet);

// Regular expressions as immutable trees. Copies share structure; all
// observers are const and thread-safe.
//
// Constructors: zero (empty language), one (empty word), chr (single
// letter), plus (union), comp (concatenation), star (Kleene iteration).
//
// Construction interns: structurally equal expressions alive at the same
// time share one node, so equality is effectively a pointer comparison,
// hashing is O(1), and iterated derivatives stay compact through shared
// subterms.
class Exp {
 public:
  enum class Kind : std::uint8_t { Zero, One, Char, Plus, Comp, Star };

  static Exp zero();
  static Exp one();
  static Exp chr(Symbol s);
  static Exp plus(Exp left, Exp right);
  static Exp comp(Exp left, Exp right);
  static Exp star(Exp inner);

  Kind kind() const { return node_->kind; }

  // Accessors below throw std::logic_error when applied to the wrong kind.
  Symbol symbol() const;   // Char
  Exp left() const;        // Plus, Comp
  Exp right() const;       // Plus, Comp
  Exp inner() const;       // Star

  // Number of constructors in the tree (leaves count 1).
  std::size_t size() const { return node_->size; }

  // Cached structural hash.
  std::size_t hash() const { return node_->hash; }

  bool operator==(const Exp& other) const;
  std::strong_ordering operator<=>(const Exp& other) const;

  // Stable address of the shared node, usable as an identity key.
  const void* identity() const { return node_.get(); }

 private:
  struct Node;
  explicit Exp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  struct Node {
    Kind kind;
    Symbol sym{U'\0'};
    std::shared_ptr<const Node> child0;  // left / inner
    std::shared_ptr<const Node> child1;  // right
    std::size_t size;
    std::size_t hash;
  };

  static std::strong_ordering compare(const Node& a, const Node& b);
  static Exp intern(Kind kind, Symbol sym, std::shared_ptr<const Node> c0,
                    std::shared_ptr<const Node> c1);

  std::shared_ptr<const Node> node_;
};

// Reported when parsing fails. `offset()` is the byte offset into the input
// where the problem was detected; `expected()` lists the token classes that
// would have been accepted there (empty for malformed UTF-8).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset,
             std::vector<std::string> expected)
      : std::runtime_error(what),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Grammar, lowest precedence first:
//   expr := cat ("+" cat)*          union, left associated
//   cat  := star star*              concatenation, left associated
//   star := atom "*"*               iteration, postfix
//   atom := "0" | "1" | CHAR | "(" expr ")"
// CHAR is any Unicode scalar except 0 1 + * ( ) and whitespace; whitespace
// between tokens is skipped. The empty input is a parse error.
Exp parse(std::string_view text);

// Prints with minimal parentheses; parse(print(e)) == e for every e.
std::string print(const Exp& e);

// Total order: by constructor (Zero < One < Char < Plus < Comp < Star),
// then lexicographically on the components.
std::strong_ordering compare(const Exp& a, const Exp& b);

// Language-preserving simplification, applied bottom-up:
//   union:         flatten, drop 0, sort, dedupe, re-associate to the left
//   concatenation: 0 annihilates, 1 is the unit
//   iteration:     0* = 1* = 1, (e*)* = e*
// Idempotent: normalize(normalize(e)) == normalize(e).
Exp normalize(const Exp& e);

}  // namespace regeq

template <>
struct std::hash<regeq::Symbol> {
  std::size_t operator()(regeq::Symbol s) const noexcept {
    return std::hash<char32_t>{}(s.value());
  }
};

template <>
struct std::hash<regeq::Exp> {
  std::size_t operator()(const regeq::Exp& e) const noexcept {
    return e.hash();
  }
};

#endif  // REGEQ_SYNTAX_HPP
