#include <doctest.h>

#include "proofcount/term.hpp"

using namespace pc;

namespace {

Goal sample_goal() {
  Goal g = goal_of(parse_formula("a"));
  g.lambda_hyps.push_back({"f", parse_formula("a -> a")});
  g.lambda_hyps.push_back({"p", parse_formula("a /\\ b")});
  g.lambda_hyps.push_back({"s", parse_formula("a \\/ b")});
  g.lambda_hyps.push_back({"u", parse_formula("a")});
  g.mu_hyps.push_back({"k", parse_formula("a")});  // k : ~a
  return g;
}

}  // namespace

TEST_CASE("print and parse round trip") {
  Goal g = sample_goal();
  for (const char* s : {
           "u",
           "\\x. x",
           "(f u)",
           "(f (f u))",
           "(p pi1)",
           "<(p pi1), u>",
           "w1 u",
           "w2 (f u)",
           "(s [x.x, y.u])",
           "mu b. (k u)",
           "(s [x.(f x), y.mu b. (b u)])",
       }) {
    Term t = parse_term(s, g);
    CHECK(print_term(t) == s);
    CHECK(term_eq(parse_term(print_term(t), g), t));
  }
}

TEST_CASE("identifiers are classified by their binder or the context") {
  Goal g = sample_goal();
  // k is a mu name: (k u) is a naming, not an application
  Term t = parse_term("(k u)", g);
  CHECK(t->kind == TKind::Named);
  // a lambda binder shadows nothing here but parses as a variable head
  Term t2 = parse_term("(f u)", g);
  CHECK(t2->kind == TKind::App);
  CHECK_THROWS_AS(parse_term("zzz", g), parse_error);
  CHECK_THROWS_AS(parse_term("k", g), parse_error);  // mu name as a term
}

TEST_CASE("free variables and renaming") {
  Goal g = sample_goal();
  Term t = parse_term("(s [x.(f x), y.mu b. (k u)])", g);
  auto fv = free_vars(t);
  auto has = [&](const char* n) {
    for (auto& v : fv)
      if (v == n) return true;
    return false;
  };
  CHECK(has("s"));
  CHECK(has("f"));
  CHECK(has("k"));
  CHECK(has("u"));
  CHECK_FALSE(has("x"));
  CHECK_FALSE(has("b"));

  Term r = parse_term("(f u)", g);
  Term renamed = rename_free(r, {{"f", "g"}, {"u", "f"}});
  CHECK(print_term(renamed) == "(g f)");  // simultaneous
}

TEST_CASE("alpha equivalence") {
  Goal g = goal_of(parse_formula("a -> a"));
  CHECK(alpha_eq(parse_term("\\x. x", g), parse_term("\\y. y", g)));
  CHECK_FALSE(alpha_eq(parse_term("\\x. \\y. x", g), parse_term("\\x. \\y. y", g)));
  CHECK(alpha_eq(parse_term("\\x. mu a. (a x)", g), parse_term("\\z. mu c. (c z)", g)));
  // free variables compare by name
  Goal h = sample_goal();
  CHECK_FALSE(alpha_eq(parse_term("(f u)", h), parse_term("(f (f u))", h)));

  Term canon = alpha_canonical(parse_term("\\x. \\y. (x y)", g));
  CHECK(print_term(canon) == print_term(alpha_canonical(parse_term("\\u. \\v. (u v)", g))));
}
