#include "regeq/syntax.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "regeq/unicode.hpp"

namespace regeq {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Children are interned before their parents, so identifying them by
// address identifies them by structure.
struct InternKey {
  Exp::Kind kind;
  char32_t sym;
  const void* c0;
  const void* c1;
  bool operator==(const InternKey&) const = default;
};

struct InternKeyHash {
  std::size_t operator()(const InternKey& k) const {
    std::size_t h = hash_combine(0, static_cast<std::size_t>(k.kind));
    h = hash_combine(h, std::hash<char32_t>{}(k.sym));
    h = hash_combine(h, std::hash<const void*>{}(k.c0));
    return hash_combine(h, std::hash<const void*>{}(k.c1));
  }
};

// Values are weak: the table never extends a node's lifetime, it only
// dedupes the nodes currently alive. Expired entries are swept whenever
// the table has doubled since the last sweep.
using InternMap =
    std::unordered_map<InternKey, std::weak_ptr<const void>, InternKeyHash>;

std::mutex& intern_mutex() {
  static std::mutex mu;
  return mu;
}

InternMap& intern_map() {
  static InternMap map;
  return map;
}

void sweep_if_bloated(InternMap& map) {
  static std::size_t threshold = 1024;  // guarded by intern_mutex()
  if (map.size() < threshold) return;
  std::erase_if(map, [](const auto& kv) { return kv.second.expired(); });
  threshold = std::max<std::size_t>(1024, map.size() * 2);
}

}  // namespace

void require_valid_alphabet(const Alphabet& alphabet) {
  if (alphabet.empty()) {
    throw std::invalid_argument("alphabet must be nonempty");
  }
  std::unordered_set<char32_t> seen;
  for (Symbol s : alphabet) {
    if (!seen.insert(s.value()).second) {
      throw std::invalid_argument("alphabet must be duplicate-free: repeated " +
                                  unicode::encode_utf8(s.value()));
    }
  }
}

Exp Exp::zero() {
  static const Exp instance{std::make_shared<const Node>(
      Node{Kind::Zero, Symbol{U'\0'}, nullptr, nullptr, 1,
           hash_combine(0, static_cast<std::size_t>(Kind::Zero))})};
  return instance;
}

Exp Exp::one() {
  static const Exp instance{std::make_shared<const Node>(
      Node{Kind::One, Symbol{U'\0'}, nullptr, nullptr, 1,
           hash_combine(0, static_cast<std::size_t>(Kind::One))})};
  return instance;
}

Exp Exp::intern(Kind kind, Symbol sym, std::shared_ptr<const Node> c0,
                std::shared_ptr<const Node> c1) {
  InternKey key{kind, sym.value(), c0.get(), c1.get()};
  {
    std::lock_guard<std::mutex> lock(intern_mutex());
    if (auto it = intern_map().find(key); it != intern_map().end()) {
      if (auto node = it->second.lock()) {
        return Exp{std::static_pointer_cast<const Node>(node)};
      }
    }
  }
  std::size_t h = hash_combine(0, static_cast<std::size_t>(kind));
  if (kind == Kind::Char) h = hash_combine(h, std::hash<char32_t>{}(sym.value()));
  std::size_t size = 1;
  if (c0) {
    h = hash_combine(h, c0->hash);
    size += c0->size;
  }
  if (c1) {
    h = hash_combine(h, c1->hash);
    size += c1->size;
  }
  auto node = std::make_shared<const Node>(
      Node{kind, sym, std::move(c0), std::move(c1), size, h});
  std::lock_guard<std::mutex> lock(intern_mutex());
  auto& slot = intern_map()[key];
  if (auto existing = slot.lock()) {
    return Exp{std::static_pointer_cast<const Node>(existing)};
  }
  slot = std::weak_ptr<const void>(node);
  sweep_if_bloated(intern_map());
  return Exp{std::move(node)};
}

Exp Exp::chr(Symbol s) { return intern(Kind::Char, s, nullptr, nullptr); }

Exp Exp::plus(Exp left, Exp right) {
  return intern(Kind::Plus, Symbol{U'\0'}, std::move(left.node_),
                std::move(right.node_));
}

Exp Exp::comp(Exp left, Exp right) {
  return intern(Kind::Comp, Symbol{U'\0'}, std::move(left.node_),
                std::move(right.node_));
}

Exp Exp::star(Exp inner) {
  return intern(Kind::Star, Symbol{U'\0'}, std::move(inner.node_), nullptr);
}

Symbol Exp::symbol() const {
  if (kind() != Kind::Char) throw std::logic_error("symbol(): not a Char");
  return node_->sym;
}

Exp Exp::left() const {
  if (kind() != Kind::Plus && kind() != Kind::Comp) {
    throw std::logic_error("left(): not a Plus or Comp");
  }
  return Exp{node_->child0};
}

Exp Exp::right() const {
  if (kind() != Kind::Plus && kind() != Kind::Comp) {
    throw std::logic_error("right(): not a Plus or Comp");
  }
  return Exp{node_->child1};
}

Exp Exp::inner() const {
  if (kind() != Kind::Star) throw std::logic_error("inner(): not a Star");
  return Exp{node_->child0};
}

std::strong_ordering Exp::compare(const Node& a, const Node& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
      c != std::strong_ordering::equal) {
    return c;
  }
  switch (a.kind) {
    case Kind::Zero:
    case Kind::One:
      return std::strong_ordering::equal;
    case Kind::Char:
      return a.sym.value() <=> b.sym.value();
    case Kind::Plus:
    case Kind::Comp:
      if (auto c = compare(*a.child0, *b.child0);
          c != std::strong_ordering::equal) {
        return c;
      }
      return compare(*a.child1, *b.child1);
    case Kind::Star:
      return compare(*a.child0, *b.child0);
  }
  throw std::logic_error("compare: unreachable");
}

bool Exp::operator==(const Exp& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->size != other.node_->size) {
    return false;
  }
  return compare(*node_, *other.node_) == std::strong_ordering::equal;
}

std::strong_ordering Exp::operator<=>(const Exp& other) const {
  return compare(*node_, *other.node_);
}

std::strong_ordering compare(const Exp& a, const Exp& b) { return a <=> b; }

namespace {

struct Token {
  enum class Type { Zero, One, Plus, Star, LParen, RParen, Char, End };
  Type type;
  char32_t chr;
  std::size_t offset;  // byte offset into the original input
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    auto dec = unicode::decode_utf8(text, i);
    if (!dec.ok) {
      throw ParseError("malformed UTF-8 at byte " + std::to_string(i), i, {});
    }
    if (unicode::is_whitespace(dec.scalar)) {
      i += dec.length;
      continue;
    }
    Token::Type type;
    switch (dec.scalar) {
      case U'0': type = Token::Type::Zero; break;
      case U'1': type = Token::Type::One; break;
      case U'+': type = Token::Type::Plus; break;
      case U'*': type = Token::Type::Star; break;
      case U'(': type = Token::Type::LParen; break;
      case U')': type = Token::Type::RParen; break;
      default: type = Token::Type::Char; break;
    }
    tokens.push_back({type, dec.scalar, i});
    i += dec.length;
  }
  tokens.push_back({Token::Type::End, 0, text.size()});
  return tokens;
}

const std::vector<std::string> kAtomExpected = {"'0'", "'1'", "CHAR", "'('"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Exp run() {
    Exp e = parse_expr();
    if (peek().type != Token::Type::End) fail({"end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string what = "syntax error at byte " + std::to_string(peek().offset) +
                       ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) what += i + 1 == expected.size() ? " or " : ", ";
      what += expected[i];
    }
    throw ParseError(what, peek().offset, std::move(expected));
  }

  static bool starts_atom(const Token& t) {
    switch (t.type) {
      case Token::Type::Zero:
      case Token::Type::One:
      case Token::Type::Char:
      case Token::Type::LParen:
        return true;
      default:
        return false;
    }
  }

  Exp parse_expr() {
    Exp e = parse_cat();
    while (peek().type == Token::Type::Plus) {
      advance();
      e = Exp::plus(std::move(e), parse_cat());
    }
    return e;
  }

  Exp parse_cat() {
    Exp e = parse_star();
    while (starts_atom(peek())) {
      e = Exp::comp(std::move(e), parse_star());
    }
    return e;
  }

  Exp parse_star() {
    Exp e = parse_atom();
    while (peek().type == Token::Type::Star) {
      advance();
      e = Exp::star(std::move(e));
    }
    return e;
  }

  Exp parse_atom() {
    switch (peek().type) {
      case Token::Type::Zero:
        advance();
        return Exp::zero();
      case Token::Type::One:
        advance();
        return Exp::one();
      case Token::Type::Char: {
        Symbol s{peek().chr};
        advance();
        return Exp::chr(s);
      }
      case Token::Type::LParen: {
        advance();
        Exp e = parse_expr();
        if (peek().type != Token::Type::RParen) fail({"')'"});
        advance();
        return e;
      }
      default:
        fail(kAtomExpected);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Exp parse(std::string_view text) { return Parser(lex(text)).run(); }

namespace {

// Precedence levels: Plus = 0, Comp = 1, Star = 2, atoms = 3. A node is
// parenthesized iff the context demands tighter binding than it provides.
void print_rec(const Exp& e, int context, std::string& out) {
  switch (e.kind()) {
    case Exp::Kind::Zero:
      out += '0';
      return;
    case Exp::Kind::One:
      out += '1';
      return;
    case Exp::Kind::Char:
      unicode::encode_utf8(e.symbol().value(), out);
      return;
    case Exp::Kind::Plus: {
      bool wrap = context > 0;
      if (wrap) out += '(';
      print_rec(e.left(), 0, out);
      out += '+';
      print_rec(e.right(), 1, out);
      if (wrap) out += ')';
      return;
    }
    case Exp::Kind::Comp: {
      bool wrap = context > 1;
      if (wrap) out += '(';
      print_rec(e.left(), 1, out);
      print_rec(e.right(), 2, out);
      if (wrap) out += ')';
      return;
    }
    case Exp::Kind::Star: {
      bool wrap = context > 2;
      if (wrap) out += '(';
      print_rec(e.inner(), 2, out);
      out += '*';
      if (wrap) out += ')';
      return;
    }
  }
}

// Flattens a (possibly nested) union of already-normalized operands.
void collect_normalized_plus(const Exp& e, std::vector<Exp>& out) {
  if (e.kind() == Exp::Kind::Plus) {
    collect_normalized_plus(e.left(), out);
    collect_normalized_plus(e.right(), out);
  } else {
    out.push_back(e);
  }
}

}  // namespace

std::string print(const Exp& e) {
  std::string out;
  print_rec(e, 0, out);
  return out;
}

Exp normalize(const Exp& e) {
  switch (e.kind()) {
    case Exp::Kind::Zero:
    case Exp::Kind::One:
    case Exp::Kind::Char:
      return e;
    case Exp::Kind::Star: {
      Exp in = normalize(e.inner());
      if (in.kind() == Exp::Kind::Zero || in.kind() == Exp::Kind::One) {
        return Exp::one();
      }
      if (in.kind() == Exp::Kind::Star) return in;
      return Exp::star(std::move(in));
    }
    case Exp::Kind::Comp: {
      Exp l = normalize(e.left());
      Exp r = normalize(e.right());
      if (l.kind() == Exp::Kind::Zero || r.kind() == Exp::Kind::Zero) {
        return Exp::zero();
      }
      if (l.kind() == Exp::Kind::One) return r;
      if (r.kind() == Exp::Kind::One) return l;
      return Exp::comp(std::move(l), std::move(r));
    }
    case Exp::Kind::Plus: {
      std::vector<Exp> operands;
      collect_normalized_plus(normalize(e.left()), operands);
      collect_normalized_plus(normalize(e.right()), operands);
      std::sort(operands.begin(), operands.end());
      operands.erase(std::unique(operands.begin(), operands.end()),
                     operands.end());
      std::erase_if(operands,
                    [](const Exp& x) { return x.kind() == Exp::Kind::Zero; });
      if (operands.empty()) return Exp::zero();
      Exp result = operands.front();
      for (std::size_t i = 1; i < operands.size(); ++i) {
        result = Exp::plus(std::move(result), operands[i]);
      }
      return result;
    }
  }
  throw std::logic_error("normalize: unreachable");
}

}  // namespace regeq
