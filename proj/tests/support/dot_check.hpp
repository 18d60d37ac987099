#ifndef REGEQ_TESTS_SUPPORT_DOT_CHECK_HPP
#define REGEQ_TESTS_SUPPORT_DOT_CHECK_HPP

// A small structural validator for the DOT output: enough of the grammar
// to catch unbalanced braces, unterminated strings, and statements that
// are neither node nor edge declarations.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace regeq::test {

struct DotCheck {
  bool ok = false;
  std::string error;
};

inline DotCheck check_dot(std::string_view text) {
  auto fail = [](std::string msg) { return DotCheck{false, std::move(msg)}; };

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto consume_word = [&](std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) != word) return false;
    pos += word.size();
    return true;
  };
  auto consume_quoted = [&] {
    skip_ws();
    if (pos >= text.size() || text[pos] != '"') return false;
    ++pos;
    while (pos < text.size() && text[pos] != '"') {
      if (text[pos] == '\\') ++pos;  // escaped character
      ++pos;
    }
    if (pos >= text.size()) return false;
    ++pos;  // closing quote
    return true;
  };
  auto consume_id = [&] {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    return pos > start;
  };

  if (!consume_word("digraph")) return fail("missing 'digraph'");
  skip_ws();
  if (pos < text.size() && text[pos] == '"') {
    if (!consume_quoted()) return fail("unterminated graph name");
  } else if (!consume_id()) {
    return fail("missing graph name");
  }
  if (!consume_word("{")) return fail("missing '{'");

  for (;;) {
    skip_ws();
    if (pos >= text.size()) return fail("missing '}'");
    if (text[pos] == '}') {
      ++pos;
      break;
    }
    // statement: ID ["=" value] | ID ["->" ID] ["[" attrs "]"] ";"
    if (!consume_id()) return fail("expected identifier at " +
                                   std::to_string(pos));
    skip_ws();
    if (pos < text.size() && text[pos] == '=') {
      ++pos;
      if (!consume_id() && !consume_quoted()) {
        return fail("bad attribute value");
      }
    } else {
      if (text.substr(pos, 2) == "->") {
        pos += 2;
        if (!consume_id()) return fail("edge without target");
        skip_ws();
      }
      if (pos < text.size() && text[pos] == '[') {
        ++pos;
        for (;;) {
          if (!consume_id()) return fail("bad attribute name");
          skip_ws();
          if (pos >= text.size() || text[pos] != '=') {
            return fail("attribute without '='");
          }
          ++pos;
          if (!consume_id() && !consume_quoted()) {
            return fail("bad attribute value");
          }
          skip_ws();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          break;
        }
        skip_ws();
        if (pos >= text.size() || text[pos] != ']') return fail("missing ']'");
        ++pos;
      }
    }
    skip_ws();
    if (pos < text.size() && text[pos] == ';') ++pos;
  }
  skip_ws();
  if (pos != text.size()) return fail("trailing content after '}'");
  return {true, ""};
}

}  // namespace regeq::test

#endif  // REGEQ_TESTS_SUPPORT_DOT_CHECK_HPP
