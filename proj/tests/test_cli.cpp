#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "support/dot_check.hpp"

// Drives the installed-style binary end to end through a shell, checking
// exact stdout and exit codes. REGEQ_BIN is injected by the build.

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(REGEQ_BIN) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), n);
  }
  int status = pclose(pipe);
  REQUIRE(status != -1);
  return {WEXITSTATUS(status), std::move(output)};
}

}  // namespace

TEST_CASE("match reports both semantics") {
  auto r = run_cli("match 'ab*' 'abb'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "accept (denotational=accept, operational=accept)\n");

  r = run_cli("match 'a*' 'b'");
  CHECK(r.exit_code == 1);
  CHECK(r.output == "reject (denotational=reject, operational=reject)\n");
}

TEST_CASE("match accepts the empty word spellings") {
  auto r = run_cli("match 'a*' 'ε'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "accept (denotational=accept, operational=accept)\n");

  r = run_cli("match 'a*' ''");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "accept (denotational=accept, operational=accept)\n");
}

TEST_CASE("equiv decides and witnesses") {
  auto r = run_cli("equiv '(a+b)*' '(a*b*)*'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "EQUIVALENT\n");

  r = run_cli("equiv 'a*' 'aa*'");
  CHECK(r.exit_code == 1);
  CHECK(r.output == "NOT EQUIVALENT; witness: ε\n");

  // The search tries 'a' before 'b', so of the two shortest witnesses
  // this pair admits, "aa" is the one reported.
  r = run_cli("equiv 'ab' 'aa'");
  CHECK(r.exit_code == 1);
  CHECK(r.output == "NOT EQUIVALENT; witness: aa\n");
}

TEST_CASE("equiv respects the pair budget") {
  auto r = run_cli("equiv 'ab' 'ba' --cap 2", true);
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("budget") != std::string::npos);
  CHECK(r.output.find("reached 2") != std::string::npos);
}

TEST_CASE("derive prints raw and simplified forms") {
  auto r = run_cli("derive 'ab' 'a'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "raw: 1b+00\nnorm: b\n");

  r = run_cli("derive 'ab' 'a' --raw");
  CHECK(r.output == "1b+00\n");

  r = run_cli("derive 'ab' 'a' --norm");
  CHECK(r.output == "b\n");

  // The empty word derives nothing.
  r = run_cli("derive 'ab' 'ε' --raw");
  CHECK(r.output == "ab\n");

  r = run_cli("derive 'a' 'a' --raw --norm");
  CHECK(r.exit_code == 2);
}

TEST_CASE("parse prints an indented tree") {
  auto r = run_cli("parse 'a(b+1)*'");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "Comp\n"
        "  Char(a)\n"
        "  Star\n"
        "    Plus\n"
        "      Char(b)\n"
        "      One\n");

  r = run_cli("parse '0'");
  CHECK(r.output == "Zero\n");
}

TEST_CASE("parse errors carry the byte offset") {
  auto r = run_cli("parse 'a++'", true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("syntax error at byte 2") != std::string::npos);

  r = run_cli("match '(a' 'a'", true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("expected") != std::string::npos);
}

TEST_CASE("enum lists members in length-lex order") {
  auto r = run_cli("enum '(a+b)(a+b)' --max-len 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "aa\nab\nba\nbb\n");

  r = run_cli("enum 'a*' --max-len 2");
  CHECK(r.output == "ε\na\naa\n");

  r = run_cli("enum 'c' --alphabet abc --max-len 1");
  CHECK(r.output == "c\n");
}

TEST_CASE("alphabet consistency is validated up front") {
  auto r = run_cli("match 'ab' 'ac'", true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("outside the alphabet") != std::string::npos);

  r = run_cli("enum 'abc'", true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("outside the alphabet") != std::string::npos);

  r = run_cli("equiv 'c' '0'", true);
  CHECK(r.exit_code == 2);

  r = run_cli("match 'a' 'a' --alphabet aa", true);
  CHECK(r.exit_code == 2);
}

TEST_CASE("dfa emits Graphviz or a summary") {
  auto r = run_cli("dfa 'ab' --dot");
  CHECK(r.exit_code == 0);
  auto check = regeq::test::check_dot(r.output);
  CAPTURE(check.error);
  CHECK(check.ok);
  CHECK(r.output.find("digraph \"ab\" {") != std::string::npos);
  CHECK(r.output.find("doublecircle") != std::string::npos);
  CHECK(r.output.find("start -> s0;") != std::string::npos);

  r = run_cli("dfa 'a*'");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("states: 2") != std::string::npos);
  CHECK(r.output.find("accepting: s0") != std::string::npos);

  r = run_cli("dfa '(a+b)*abab' --cap 3", true);
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("cap") != std::string::npos);
}

TEST_CASE("usage problems exit with 2") {
  CHECK(run_cli("nosuch").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("equiv 'a'").exit_code == 2);
  CHECK(run_cli("enum 'a' --max-len -3").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
