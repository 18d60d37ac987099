// regeq: command-line front end for the regular-expression toolkit.
//
// Exit codes: 0 positive verdict or success, 1 negative verdict (reject,
// not equivalent), 2 usage or parse error, 3 resource cap exceeded,
// 4 internal consistency failure (the two semantics disagreed).

#include <cstddef>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regeq/automaton.hpp"
#include "regeq/bisim.hpp"
#include "regeq/errors.hpp"
#include "regeq/language.hpp"
#include "regeq/semantics.hpp"
#include "regeq/syntax.hpp"
#include "regeq/unicode.hpp"

namespace {

using namespace regeq;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

// Decodes a command-line string into symbols, one per Unicode scalar.
std::vector<Symbol> decode_symbols(const std::string& text,
                                   const char* what) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto dec = unicode::decode_utf8(text, i);
    if (!dec.ok) {
      throw std::invalid_argument(std::string(what) +
                                  " is not valid UTF-8 at byte " +
                                  std::to_string(i));
    }
    out.push_back(Symbol{dec.scalar});
    i += dec.length;
  }
  return out;
}

Alphabet parse_alphabet(const std::string& text) {
  Alphabet alphabet = decode_symbols(text, "alphabet");
  require_valid_alphabet(alphabet);  // rejects empty and duplicated letters
  return alphabet;
}

// "ε" and the empty string both denote the empty word.
Word parse_cli_word(const std::string& text) {
  if (text == "ε") return {};
  return decode_symbols(text, "word");
}

std::string format_word(const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (Symbol s : w) unicode::encode_utf8(s.value(), out);
  return out;
}

void require_word_in_alphabet(const Word& w, const Alphabet& alphabet) {
  for (Symbol s : w) {
    for (Symbol a : alphabet) {
      if (a == s) goto next;
    }
    throw std::invalid_argument("word uses letter '" +
                                unicode::encode_utf8(s.value()) +
                                "' outside the alphabet");
  next:;
  }
}

void collect_symbols(const Exp& e, std::vector<Symbol>& out) {
  switch (e.kind()) {
    case Exp::Kind::Zero:
    case Exp::Kind::One:
      return;
    case Exp::Kind::Char:
      out.push_back(e.symbol());
      return;
    case Exp::Kind::Plus:
    case Exp::Kind::Comp:
      collect_symbols(e.left(), out);
      collect_symbols(e.right(), out);
      return;
    case Exp::Kind::Star:
      collect_symbols(e.inner(), out);
      return;
  }
}

void require_exp_in_alphabet(const Exp& e, const Alphabet& alphabet) {
  std::vector<Symbol> used;
  collect_symbols(e, used);
  for (Symbol s : used) {
    for (Symbol a : alphabet) {
      if (a == s) goto next;
    }
    throw std::invalid_argument("expression uses letter '" +
                                unicode::encode_utf8(s.value()) +
                                "' outside the alphabet");
  next:;
  }
}

void print_ast(const Exp& e, int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (e.kind()) {
    case Exp::Kind::Zero:
      std::cout << pad << "Zero\n";
      return;
    case Exp::Kind::One:
      std::cout << pad << "One\n";
      return;
    case Exp::Kind::Char:
      std::cout << pad << "Char("
                << unicode::encode_utf8(e.symbol().value()) << ")\n";
      return;
    case Exp::Kind::Plus:
      std::cout << pad << "Plus\n";
      print_ast(e.left(), depth + 1);
      print_ast(e.right(), depth + 1);
      return;
    case Exp::Kind::Comp:
      std::cout << pad << "Comp\n";
      print_ast(e.left(), depth + 1);
      print_ast(e.right(), depth + 1);
      return;
    case Exp::Kind::Star:
      std::cout << pad << "Star\n";
      print_ast(e.inner(), depth + 1);
      return;
  }
}

int run_match(const std::string& expr_text, const std::string& word_text,
              const std::string& alphabet_text) {
  Exp e = parse(expr_text);
  Alphabet alphabet = parse_alphabet(alphabet_text);
  Word w = parse_cli_word(word_text);
  require_word_in_alphabet(w, alphabet);

  bool den = member(denotational(e), w);
  bool op = member(operational(e), w);
  if (den != op) {
    std::cerr << "internal error: the two semantics disagree on '"
              << format_word(w) << "': denotational="
              << (den ? "accept" : "reject")
              << ", operational=" << (op ? "accept" : "reject") << "\n";
    return kExitInternal;
  }
  const char* verdict = den ? "accept" : "reject";
  std::cout << verdict << " (denotational=" << verdict
            << ", operational=" << verdict << ")\n";
  return den ? kExitAccept : kExitReject;
}

int run_derive(const std::string& expr_text, const std::string& word_text,
               const std::string& alphabet_text, bool raw_only,
               bool norm_only) {
  Exp e = parse(expr_text);
  Alphabet alphabet = parse_alphabet(alphabet_text);
  Word w = parse_cli_word(word_text);
  require_word_in_alphabet(w, alphabet);

  Exp raw = e;
  for (Symbol a : w) raw = derivative(raw, a);
  if (raw_only) {
    std::cout << print(raw) << "\n";
  } else if (norm_only) {
    std::cout << print(normalize(raw)) << "\n";
  } else {
    std::cout << "raw: " << print(raw) << "\n";
    std::cout << "norm: " << print(normalize(raw)) << "\n";
  }
  return kExitAccept;
}

int run_enum(const std::string& expr_text, const std::string& alphabet_text,
             std::size_t max_len) {
  Exp e = parse(expr_text);
  Alphabet alphabet = parse_alphabet(alphabet_text);
  require_exp_in_alphabet(e, alphabet);

  for (const Word& w : enumerate(denotational(e), alphabet, max_len)) {
    std::cout << format_word(w) << "\n";
  }
  return kExitAccept;
}

int run_equiv(const std::string& lhs_text, const std::string& rhs_text,
              const std::string& alphabet_text, std::size_t depth,
              std::size_t cap) {
  Exp e1 = parse(lhs_text);
  Exp e2 = parse(rhs_text);
  Alphabet alphabet = parse_alphabet(alphabet_text);
  require_exp_in_alphabet(e1, alphabet);
  require_exp_in_alphabet(e2, alphabet);

  EquivResult result = decide_equivalence(e1, e2, alphabet, cap);
  if (result.verdict == EquivResult::Verdict::Equivalent) {
    // Sanity gate: the decision must be reproducible behaviourally.
    if (!bisimilar(depth, denotational(e1), denotational(e2), alphabet)) {
      std::cerr << "internal error: decided equivalent but the languages "
                   "differ within depth "
                << depth << "\n";
      return kExitInternal;
    }
    std::cout << "EQUIVALENT\n";
    return kExitAccept;
  }
  const Word& w = *result.witness;
  if (member(denotational(e1), w) == member(denotational(e2), w)) {
    std::cerr << "internal error: witness '" << format_word(w)
              << "' does not distinguish the languages\n";
    return kExitInternal;
  }
  std::cout << "NOT EQUIVALENT; witness: " << format_word(w) << "\n";
  return kExitReject;
}

int run_dfa(const std::string& expr_text, const std::string& alphabet_text,
            std::size_t cap, bool dot) {
  Exp e = parse(expr_text);
  Alphabet alphabet = parse_alphabet(alphabet_text);
  require_exp_in_alphabet(e, alphabet);

  Dfa d = explore(e, alphabet, cap);
  if (dot) {
    std::cout << d.to_dot(print(e));
    return kExitAccept;
  }
  std::cout << "states: " << d.state_count() << "\n";
  std::cout << "accepting:";
  for (std::size_t s : d.accepting_states()) std::cout << " s" << s;
  std::cout << "\n";
  for (std::size_t i = 0; i < d.state_count(); ++i) {
    std::cout << "s" << i << " [" << print(d.state(i)) << "]";
    for (Symbol a : d.alphabet()) {
      std::cout << " " << unicode::encode_utf8(a.value()) << "->s"
                << d.target(i, a);
    }
    std::cout << "\n";
  }
  return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular expression toolkit: parsing, matching under two "
               "semantics, derivatives, enumeration, equivalence, automata"};
  app.require_subcommand(1);

  std::string expr_text;
  std::string rhs_text;
  std::string word_text;
  std::string alphabet_text = "ab";
  std::size_t depth = 8;
  std::size_t max_len = 6;
  std::size_t cap = 100000;
  bool raw_only = false;
  bool norm_only = false;
  bool dot = false;

  CLI::App* cmd_parse = app.add_subcommand("parse", "Print the syntax tree");
  cmd_parse->add_option("expr", expr_text, "expression")->required();

  CLI::App* cmd_match = app.add_subcommand(
      "match", "Test word membership under both semantics");
  cmd_match->add_option("expr", expr_text, "expression")->required();
  cmd_match->add_option("word", word_text,
                        "word (ε or '' for the empty word)")
      ->required();
  cmd_match->add_option("--alphabet", alphabet_text, "alphabet letters");

  CLI::App* cmd_derive = app.add_subcommand(
      "derive", "Print the derivative by a word");
  cmd_derive->add_option("expr", expr_text, "expression")->required();
  cmd_derive->add_option("word", word_text,
                         "word (ε or '' for the empty word)")
      ->required();
  cmd_derive->add_option("--alphabet", alphabet_text, "alphabet letters");
  CLI::Option* raw_opt =
      cmd_derive->add_flag("--raw", raw_only, "print only the raw form");
  cmd_derive->add_flag("--norm", norm_only, "print only the simplified form")
      ->excludes(raw_opt);

  CLI::App* cmd_enum = app.add_subcommand(
      "enum", "List member words up to a length, length-lexicographically");
  cmd_enum->add_option("expr", expr_text, "expression")->required();
  cmd_enum->add_option("--max-len", max_len, "maximum word length");
  cmd_enum->add_option("--alphabet", alphabet_text, "alphabet letters");

  CLI::App* cmd_equiv = app.add_subcommand(
      "equiv", "Decide language equivalence of two expressions");
  cmd_equiv->add_option("lhs", expr_text, "left expression")->required();
  cmd_equiv->add_option("rhs", rhs_text, "right expression")->required();
  cmd_equiv->add_option("--depth", depth, "bisimilarity cross-check depth");
  cmd_equiv->add_option("--cap", cap, "state-pair budget");
  cmd_equiv->add_option("--alphabet", alphabet_text, "alphabet letters");

  CLI::App* cmd_dfa = app.add_subcommand(
      "dfa", "Build the automaton of simplified derivatives");
  cmd_dfa->add_option("expr", expr_text, "expression")->required();
  cmd_dfa->add_option("--cap", cap, "state budget");
  cmd_dfa->add_option("--alphabet", alphabet_text, "alphabet letters");
  cmd_dfa->add_flag("--dot", dot, "emit a Graphviz digraph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the usage error itself
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_parse) {
      print_ast(parse(expr_text), 0);
      return kExitAccept;
    }
    if (*cmd_match) return run_match(expr_text, word_text, alphabet_text);
    if (*cmd_derive) {
      return run_derive(expr_text, word_text, alphabet_text, raw_only,
                        norm_only);
    }
    if (*cmd_enum) return run_enum(expr_text, alphabet_text, max_len);
    if (*cmd_equiv) {
      return run_equiv(expr_text, rhs_text, alphabet_text, depth, cap);
    }
    if (*cmd_dfa) return run_dfa(expr_text, alphabet_text, cap, dot);
    std::cerr << "error: no command\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << " (reached " << e.reached()
              << ")\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
