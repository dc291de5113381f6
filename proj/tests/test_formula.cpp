#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "proofcount/formula.hpp"

using namespace pc;

TEST_CASE("parsing precedence and associativity") {
  CHECK(formula_eq(parse_formula("a -> b -> c"), implies(atom("a"), implies(atom("b"), atom("c")))));
  CHECK(formula_eq(parse_formula("a /\\ b \\/ c"), disj(conj(atom("a"), atom("b")), atom("c"))));
  CHECK(formula_eq(parse_formula("a \\/ b /\\ c"), disj(atom("a"), conj(atom("b"), atom("c")))));
  CHECK(formula_eq(parse_formula("a /\\ b /\\ c"), conj(conj(atom("a"), atom("b")), atom("c"))));
  CHECK(formula_eq(parse_formula("a -> b /\\ c"), implies(atom("a"), conj(atom("b"), atom("c")))));
  CHECK(formula_eq(parse_formula("(a -> b) -> c"), implies(implies(atom("a"), atom("b")), atom("c"))));
}

TEST_CASE("negation is sugar for -> bottom") {
  CHECK(formula_eq(parse_formula("~a"), implies(atom("a"), bottom())));
  CHECK(formula_eq(parse_formula("~~a"), neg(neg(atom("a")))));
  CHECK(formula_eq(parse_formula("~(a \\/ b)"), neg(disj(atom("a"), atom("b")))));
  CHECK(formula_eq(parse_formula("a -> _|_"), neg(atom("a"))));
  CHECK(formula_eq(parse_formula("bot"), bottom()));
  CHECK(is_negation(parse_formula("~a")));
  CHECK_FALSE(is_negation(parse_formula("a -> b")));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("a ->"), parse_error);
  CHECK_THROWS_AS(parse_formula("(a -> b"), parse_error);
  CHECK_THROWS_AS(parse_formula("a b"), parse_error);
  CHECK_THROWS_AS(parse_formula(""), parse_error);
  try {
    parse_formula("a -> )");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("rendering uses minimal parentheses and the ~ sugar") {
  CHECK(render(parse_formula("a -> b -> c")) == "a -> b -> c");
  CHECK(render(parse_formula("(a -> b) -> c")) == "(a -> b) -> c");
  CHECK(render(parse_formula("~a \\/ a")) == "~a \\/ a");
  CHECK(render(parse_formula("~~a")) == "~~a");
  CHECK(render(parse_formula("~(a -> b)")) == "~(a -> b)");
  CHECK(render(parse_formula("a /\\ (b \\/ c)")) == "a /\\ (b \\/ c)");
  CHECK(render(bottom()) == "_|_");
}

TEST_CASE("parse of render is the identity on random formulas") {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> pick(0, 5);
  auto gen = [&](auto&& self, int depth) -> Formula {
    if (depth == 0) return pick(rng) < 3 ? atom("a") : atom("b");
    switch (pick(rng)) {
      case 0: return atom("a");
      case 1: return bottom();
      case 2: return implies(self(self, depth - 1), self(self, depth - 1));
      case 3: return conj(self(self, depth - 1), self(self, depth - 1));
      case 4: return disj(self(self, depth - 1), self(self, depth - 1));
      default: return neg(self(self, depth - 1));
    }
  };
  for (int i = 0; i < 500; i++) {
    Formula f = gen(gen, 4);
    CHECK(formula_eq(parse_formula(render(f)), f));
  }
}

TEST_CASE("structural order is total and consistent with equality") {
  Formula a = parse_formula("a"), b = parse_formula("b"), ab = parse_formula("a -> b");
  CHECK(formula_cmp(a, a) == 0);
  CHECK(formula_cmp(a, b) == -formula_cmp(b, a));
  CHECK(formula_lt(a, b));
  CHECK((formula_lt(a, ab) != formula_lt(ab, a)));
}

TEST_CASE("subformulae deduplicates and includes the formula itself") {
  Formula f = parse_formula("(a -> b) -> a -> b");
  auto subs = subformulae(f);
  CHECK(subs.size() == 4);  // a, b, a -> b, f
  CHECK(formula_eq(subs.back(), f));
}

TEST_CASE("rank of implicational formulas") {
  CHECK(rank(parse_formula("a")) == 0);
  CHECK(rank(parse_formula("a -> b")) == 1);
  CHECK(rank(parse_formula("(a -> b) -> c")) == 2);
  CHECK(rank(parse_formula("a -> (b -> c) -> d")) == 2);
  CHECK_THROWS_AS(rank(parse_formula("a /\\ b")), std::invalid_argument);
  CHECK_THROWS_AS(rank(parse_formula("~a")), std::invalid_argument);
}

TEST_CASE("elim lists") {
  Formula a = atom("a"), b = atom("b"), c = atom("c");

  SUBCASE("direct hit is a single empty star list") {
    auto ls = elim(a, a);
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].star);
    CHECK(ls[0].steps.empty());
  }
  SUBCASE("atomic mismatch yields nothing") {
    CHECK(elim(a, b).empty());
    CHECK(elim(bottom(), a).empty());
  }
  SUBCASE("arrows accumulate subgoals") {
    auto ls = elim(implies(b, implies(c, c)), c);
    REQUIRE(ls.size() == 1);
    auto pre = ls[0].prefix();
    REQUIRE(pre.size() == 2);
    CHECK(formula_eq(pre[0], b));
    CHECK(formula_eq(pre[1], c));
  }
  SUBCASE("conjunctions branch and keep duplicates") {
    auto ls = elim(conj(c, c), c);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].has_proj());
    CHECK(ls[1].has_proj());
    CHECK(ls[0].steps[0].proj_index == 1);
    CHECK(ls[1].steps[0].proj_index == 2);
  }
  SUBCASE("a disjunction ends the list") {
    auto ls = elim(implies(a, disj(b, c)), c);
    // one from the pending disjunction; none via b or c directly
    REQUIRE(ls.size() == 1);
    CHECK_FALSE(ls[0].star);
    CHECK(formula_eq(ls[0].d1, b));
    CHECK(formula_eq(ls[0].d2, c));
    CHECK(ls[0].prefix().size() == 1);
  }
  SUBCASE("A = B clause takes precedence over decomposition") {
    Formula f = implies(a, b);
    auto ls = elim(f, f);
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].steps.empty());
  }
}
