#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regeq/semantics.hpp"
#include "regeq/syntax.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace regeq;
using test::word;

namespace {

const Symbol kA{U'a'};
const Symbol kB{U'b'};

}  // namespace

TEST_CASE("denotational follows the constructors") {
  CHECK_FALSE(denotational(Exp::zero()).eps());
  CHECK(denotational(Exp::one()).eps());
  CHECK(member(denotational(parse("(a+b)*")), word("bab")));
  CHECK_FALSE(member(denotational(parse("ab")), word("a")));

  SUBCASE("word sets match the set-of-words model") {
    test::ExpGen gen(20240831, test::ab());
    for (int i = 0; i < 100; ++i) {
      Exp e = gen.random_exp(10);
      Lang l = denotational(e);
      auto expected = test::oracle_words(e, 5);
      CAPTURE(print(e));
      for (const Word& w : test::all_words(test::ab(), 5)) {
        CHECK(member(l, w) == (expected.count(w) > 0));
      }
    }
  }
}

TEST_CASE("nullable: the empty-word bit on syntax") {
  CHECK(nullable(parse("0*")));
  CHECK_FALSE(nullable(Exp::comp(Exp::one(), Exp::chr(kA))));
  CHECK(nullable(Exp::plus(Exp::zero(), Exp::one())));
  CHECK(nullable(parse("(ab)*")));
  CHECK_FALSE(nullable(parse("a*b")));

  SUBCASE("agrees with the denotational empty-word bit") {
    test::ExpGen gen(20240832, test::ab());
    for (int i = 0; i < 500; ++i) {
      Exp e = gen.random_exp(12);
      CAPTURE(print(e));
      CHECK(denotational(e).eps() == nullable(e));
    }
  }
}

TEST_CASE("derivative: shape of the syntactic rules") {
  CHECK(derivative(Exp::chr(kA), kA) == Exp::one());
  CHECK(derivative(Exp::chr(kA), kB) == Exp::zero());

  // The concatenation rule keeps its guard as an explicit 0/1 factor.
  CHECK(derivative(parse("ab"), kA) ==
        Exp::plus(Exp::comp(Exp::one(), Exp::chr(kB)),
                  Exp::comp(Exp::zero(), Exp::zero())));
  CHECK(normalized_derivative(parse("ab"), kA) == Exp::chr(kB));

  // Iteration unrolls one step and reuses the original star node.
  CHECK(derivative(parse("a*"), kA) ==
        Exp::comp(Exp::one(), Exp::star(Exp::chr(kA))));

  SUBCASE("derivative soundness against the denotational side") {
    test::ExpGen gen(20240833, test::ab());
    for (int i = 0; i < 200; ++i) {
      Exp e = gen.random_exp(10);
      for (Symbol a : test::ab()) {
        Lang whole = denotational(e);
        Lang derived = denotational(derivative(e, a));
        CAPTURE(print(e));
        for (const Word& w : test::all_words(test::ab(), 5)) {
          Word prefixed{a};
          prefixed.insert(prefixed.end(), w.begin(), w.end());
          CHECK(member(derived, w) == member(whole, prefixed));
        }
      }
    }
  }
}

TEST_CASE("normalization preserves observations") {
  test::ExpGen gen(20240834, test::ab());
  for (int i = 0; i < 200; ++i) {
    Exp e = gen.random_exp(12);
    Lang a = operational(e);
    Lang b = operational(normalize(e));
    CAPTURE(print(e));
    for (const Word& w : test::all_words(test::ab(), 6)) {
      CHECK(member(a, w) == member(b, w));
    }
  }
}

TEST_CASE("operational: behavior built from eps/derivative") {
  CHECK(operational(parse("a*")).eps());
  CHECK(member(operational(parse("ab*")), word("abb")));
  CHECK_FALSE(member(operational(parse("ab*")), word("ba")));

  SUBCASE("agrees with denotational on every short word") {
    test::ExpGen gen(20240835, test::ab());
    for (int i = 0; i < 100; ++i) {
      Exp e = gen.random_exp(12);
      Lang op = operational(e);
      Lang den = denotational(e);
      CAPTURE(print(e));
      for (const Word& w : test::all_words(test::ab(), 6)) {
        CHECK(member(op, w) == member(den, w));
      }
    }
  }
}
