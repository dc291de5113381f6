#include <doctest.h>

#include "proofcount/check.hpp"

using namespace pc;

namespace {

Goal mk(const char* concl, std::initializer_list<std::pair<const char*, const char*>> lam = {},
        std::initializer_list<std::pair<const char*, const char*>> mu = {}) {
  Goal g = goal_of(parse_formula(concl));
  for (auto& [n, t] : lam) g.lambda_hyps.push_back({n, parse_formula(t)});
  for (auto& [n, t] : mu) g.mu_hyps.push_back({n, parse_formula(t)});
  return g;
}

Term pt(const char* s, const Goal& g) { return parse_term(s, g); }

}  // namespace

TEST_CASE("typechecking the typing rules") {
  CHECK(typecheck(mk("a -> a"), pt("\\x. x", mk("a -> a"))));
  CHECK(typecheck(mk("a -> b -> a"), pt("\\x. \\y. x", mk("a -> b -> a"))));
  CHECK_FALSE(typecheck(mk("a -> b"), pt("\\x. x", mk("a -> b"))));

  Goal g = mk("a", {{"f", "b -> a"}, {"y", "b"}});
  CHECK(typecheck(g, pt("(f y)", g)));
  CHECK_FALSE(typecheck(g, pt("(f f)", g)));

  Goal gp = mk("a", {{"p", "a /\\ b"}});
  CHECK(typecheck(gp, pt("(p pi1)", gp)));
  CHECK_FALSE(typecheck(gp, pt("(p pi2)", gp)));

  Goal gs = mk("c", {{"s", "a \\/ b"}, {"f", "a -> c"}, {"g", "b -> c"}});
  CHECK(typecheck(gs, pt("(s [x.(f x), y.(g y)])", gs)));
  CHECK_FALSE(typecheck(gs, pt("(s [x.(g x), y.(f y)])", gs)));

  Goal gi = mk("a \\/ b", {{"x", "a"}});
  CHECK(typecheck(gi, pt("w1 x", gi)));
  CHECK_FALSE(typecheck(gi, pt("w2 x", gi)));

  // mu and naming
  Goal gmu = mk("a -> a");
  CHECK(typecheck(gmu, pt("\\x. mu k. (k x)", gmu)));
  CHECK_FALSE(typecheck(gmu, pt("\\x. mu k. x", gmu)));  // body must prove bottom

  Goal gb = mk("_|_", {{"v", "b"}}, {{"k", "a"}});
  CHECK_FALSE(typecheck(gb, pt("(k v)", gb)));  // named argument has the wrong type
  Goal gb2 = mk("_|_", {{"v", "a"}}, {{"k", "a"}});
  CHECK(typecheck(gb2, pt("(k v)", gb2)));
}

TEST_CASE("typecheck diagnostics name the failure") {
  Goal g = mk("a -> b");
  auto d = typecheck_diag(g, pt("\\x. x", g));
  REQUIRE(d.has_value());
  CHECK(d->find("x") != std::string::npos);
  CHECK_FALSE(typecheck_diag(mk("a -> a"), pt("\\x. x", mk("a -> a"))).has_value());
}

TEST_CASE("redex detection covers the five shapes") {
  Goal g = mk("a", {{"f", "a -> a"}, {"u", "a"}, {"p", "a /\\ a"}, {"s", "a \\/ a"}});
  CHECK(is_normal(pt("(f (f u))", g)));
  CHECK(is_normal(pt("\\x. x", mk("a -> a"))));

  CHECK_FALSE(is_normal(pt("(\\x. x u)", g)));                 // beta
  CHECK_FALSE(is_normal(pt("(<u, u> pi1)", g)));               // projection
  CHECK_FALSE(is_normal(pt("(w1 u [x.x, y.y])", g)));          // case on injection
  CHECK_FALSE(is_normal(pt("(s [x.f, y.f] u)", g)));           // permutative
  CHECK_FALSE(is_normal(pt("(mu k. (k u) u)", mk("a", {{"u", "a -> a"}}))));  // classical cut
  // a redex under a binder is still a redex
  CHECK_FALSE(is_normal(pt("\\z. (\\x. x u)", mk("b -> a", {{"u", "a"}}))));
}

TEST_CASE("reduction steps") {
  Goal g = mk("a", {{"f", "a -> a"}, {"u", "a"}});
  SUBCASE("beta") {
    auto r = reduce_step(pt("(\\x. (f x) u)", g));
    REQUIRE(r.has_value());
    CHECK(print_term(*r) == "(f u)");
  }
  SUBCASE("projection") {
    auto r = reduce_step(pt("(<u, (f u)> pi2)", g));
    REQUIRE(r.has_value());
    CHECK(print_term(*r) == "(f u)");
  }
  SUBCASE("case on injection") {
    Goal gs = mk("a", {{"u", "a"}, {"g", "b -> a"}});
    auto r = reduce_step(pt("(w1 u [x.x, y.(g y)])", gs));
    REQUIRE(r.has_value());
    CHECK(print_term(*r) == "u");
  }
  SUBCASE("permutative conversion pushes the argument into the branches") {
    Goal gs = mk("a", {{"s", "a \\/ a"}, {"f", "a -> a"}, {"u", "a"}});
    Term t = pt("((s [x.f, y.f]) u)", gs);
    auto r = reduce_step(t);
    REQUIRE(r.has_value());
    CHECK(print_term(*r) == "(s [x.(f u), y.(f u)])");
  }
  SUBCASE("classical cut renames the applications under the mu") {
    Goal gm = mk("a", {{"h", "((a -> a) -> _|_) -> _|_"}});
    // (mu k. (h \f. (k f)) u) -> mu k. (h \f. (k (f u)))
    Goal inner = mk("a", {{"h", "((a -> a) -> _|_) -> _|_"}, {"u", "a"}});
    Term t = pt("(mu k. (h \\f. (k f)) u)", inner);
    auto r = reduce_step(t);
    REQUIRE(r.has_value());
    CHECK(print_term(*r) == "mu k. (h \\f. (k (f u)))");
    CHECK(is_normal(*r));
  }
  SUBCASE("normal terms do not step") {
    CHECK_FALSE(reduce_step(pt("(f (f u))", g)).has_value());
  }
  SUBCASE("subject reduction on a chain") {
    Goal gc = mk("a", {{"f", "a -> a"}, {"u", "a"}});
    Term t = pt("(\\g. (g (\\x. x (g u))) f)", gc);
    CHECK(typecheck(gc, t));
    int steps = 0;
    while (auto r = reduce_step(t)) {
      t = *r;
      CHECK(typecheck(gc, t));
      REQUIRE(++steps < 50);
    }
    CHECK(is_normal(t));
    CHECK(print_term(t) == "(f (f u))");
  }
}

TEST_CASE("capture avoidance in substitution") {
  // (\x. \y. x  y) must not capture the free y
  Goal g = mk("b -> a", {{"y", "a"}});
  Term t = pt("(\\x. \\y. x y)", g);
  auto r = reduce_step(t);
  REQUIRE(r.has_value());
  auto fv = free_vars(*r);
  REQUIRE(fv.size() == 1);
  CHECK(fv[0] == "y");
  CHECK((*r)->kind == TKind::Lam);
  CHECK((*r)->name != "y");
}

TEST_CASE("term size follows the max-based rules") {
  Goal g = mk("a", {{"f", "a -> a"}, {"u", "a"}, {"p", "a /\\ a"}, {"h", "a -> a -> a"},
                    {"s", "a \\/ a"}});
  CHECK(term_size(pt("u", g)) == 1);
  CHECK(term_size(pt("\\x. x", mk("a -> a"))) == 2);
  CHECK(term_size(pt("(f u)", g)) == 2);
  CHECK(term_size(pt("(h u (f u))", g)) == 3);        // max(1, 2) + 1
  CHECK(term_size(pt("(p pi1)", g)) == 2);            // projections count 1
  CHECK(term_size(pt("<u, (f u)>", g)) == 3);         // max + 1
  CHECK(term_size(pt("(s [x.x, y.(f y)])", g)) == 3); // branches join the max
  CHECK(term_size(pt("mu k. (k u)", g)) == 3);
  CHECK(term_size(pt("w1 u", mk("a \\/ a", {{"u", "a"}}))) == 2);
}

TEST_CASE("fairness") {
  SUBCASE("case splits must consume the hypothesis") {
    Goal g = mk("a", {{"s", "a \\/ a"}});
    CHECK(is_fair(g, pt("(s [x.x, y.y])", g)));
    Goal g2 = mk("a \\/ a", {{"s", "a \\/ a"}});
    CHECK_FALSE(is_fair(g2, pt("(s [x.s, y.s])", g2)));
  }
  SUBCASE("no mu at bottom or a negation") {
    Goal g = mk("~a", {{"k", "~a"}});
    CHECK_FALSE(is_fair(g, pt("mu b. (b k)", g)));
    Goal gb = mk("_|_", {{"u", "_|_"}});
    CHECK_FALSE(is_fair(gb, pt("mu b. u", gb)));
    CHECK(is_fair(gb, pt("u", gb)));
  }
  SUBCASE("no repeated mu on the same formula in scope") {
    Goal g = mk("a");
    Goal inner = mk("a -> a");
    CHECK(is_fair(inner, pt("\\x. mu k. (k x)", inner)));
    CHECK_FALSE(is_fair(inner, pt("\\x. mu k. (k mu j. (k x))", inner)));
    // the goal's own mu context counts as enclosing
    Goal gm = mk("a", {{"u", "a"}}, {{"k", "a"}});
    CHECK_FALSE(is_fair(gm, pt("mu j. (k u)", gm)));
    CHECK(is_fair(gm, pt("u", gm)));
  }
  SUBCASE("precondition violation throws") {
    Goal g = mk("a -> b");
    CHECK_THROWS_AS(is_fair(g, pt("\\x. x", g)), std::logic_error);
  }
}

TEST_CASE("eta-long form") {
  Goal g = mk("a -> a", {{"f", "a -> a"}});
  CHECK(is_eta_long(g, pt("\\x. x", g)));
  CHECK_FALSE(is_eta_long(g, pt("f", g)));          // arrow-typed, not an abstraction
  CHECK(is_eta_long(g, pt("\\x. (f x)", g)));       // f is an applied head: exempt

  Goal gp = mk("a /\\ b", {{"p", "a /\\ b"}});
  CHECK_FALSE(is_eta_long(gp, pt("p", gp)));
  CHECK(is_eta_long(gp, pt("<(p pi1), (p pi2)>", gp)));

  Goal gh = mk("a", {{"h", "(a -> a) -> a"}, {"f", "a -> a"}});
  CHECK_FALSE(is_eta_long(gh, pt("(h f)", gh)));    // argument f is arrow-typed, bare
  CHECK(is_eta_long(gh, pt("(h \\x. x)", gh)));

  CHECK_THROWS_AS(is_eta_long(mk("a -> b"), pt("\\x. x", mk("a -> b"))), std::logic_error);
}
