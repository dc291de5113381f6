#include <doctest.h>

#include <algorithm>
#include <random>

#include "proofcount/extnat.hpp"
#include "proofcount/poly.hpp"

using namespace pc;

namespace {

const ExtNat W = ExtNat::omega();

Polynomial C(std::uint64_t n) { return Polynomial::constant(ExtNat(n)); }
Polynomial V(VarId x) { return Polynomial::variable(x); }

Polynomial random_poly(std::mt19937& rng, int nvars, int max_deg, int max_coeff) {
  std::uniform_int_distribution<int> nterms(0, 4), coeff(1, max_coeff), deg(0, max_deg);
  Polynomial p;
  int t = nterms(rng);
  for (int i = 0; i < t; i++) {
    Polynomial m = C(static_cast<std::uint64_t>(coeff(rng)));
    for (VarId v = 0; v < nvars; v++)
      for (int d = deg(rng); d > 0; d--) m = m * V(v);
    p = p + m;
  }
  return p;
}

}  // namespace

TEST_CASE("extended naturals arithmetic") {
  CHECK(ExtNat(0) * W == ExtNat(0));
  CHECK(W * ExtNat(0) == ExtNat(0));
  CHECK(ExtNat(3) + W == W);
  CHECK(W + ExtNat(3) == W);
  CHECK(ExtNat(2) * W == W);
  CHECK(W * W == W);
  CHECK(ExtNat(2) + ExtNat(3) == ExtNat(5));
  CHECK(ExtNat(2) * ExtNat(3) == ExtNat(6));
  CHECK(ExtNat(5) < W);
  CHECK_FALSE(W < W);
  CHECK(ExtNat(1) <= ExtNat(1));
  CHECK(ExtNat(0).is_zero());
  CHECK(W.is_omega());
  CHECK(W.str() == "w");
  // finite arithmetic saturates instead of wrapping
  ExtNat big(ExtNat::kCap);
  CHECK((big + ExtNat(10)).value() == ExtNat::kCap);
  CHECK((big * ExtNat(2)).value() == ExtNat::kCap);
  CHECK_FALSE((big + big).is_omega());
}

TEST_CASE("polynomial canonical form") {
  Polynomial p = V(0) * V(1) + V(1) * V(0) + C(1);
  CHECK(p.terms.size() == 2);  // like monomials merged
  CHECK(p.constant_term() == ExtNat(1));
  CHECK((V(0) + C(0)).terms.size() == 1);
  CHECK(scale(V(0), ExtNat(0)).is_zero());
  CHECK(Polynomial::zero().is_zero());
  CHECK(p.degree() == 2);
  CHECK((V(2) * V(2)).degree() == 2);
  auto vs = (V(0) * V(2) + V(1)).vars();
  CHECK(vs == std::vector<VarId>{0, 1, 2});
}

TEST_CASE("evaluation") {
  // x^2 + 2 at x=3
  Polynomial p = V(0) * V(0) + C(2);
  CHECK(eval(p, {ExtNat(3)}) == ExtNat(11));
  // x + 1 at omega
  CHECK(eval(V(0) + C(1), {W}) == W);
  // zero-coefficient monomials vanish: 0*x evaluates to 0 even at omega
  CHECK(eval(scale(V(0), ExtNat(0)), {W}) == ExtNat(0));
  CHECK_THROWS_AS(eval(V(3), {ExtNat(1)}), std::out_of_range);
}

TEST_CASE("substitution agrees with evaluation") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; i++) {
    Polynomial p = random_poly(rng, 2, 2, 3);
    Polynomial q = random_poly(rng, 2, 2, 3);
    std::uniform_int_distribution<std::uint64_t> val(0, 4);
    std::vector<ExtNat> env{ExtNat(val(rng)), ExtNat(val(rng))};
    std::vector<ExtNat> env2 = env;
    env2[0] = eval(q, env);
    CHECK(eval(subst(p, 0, q), env) == eval(p, env2));
  }
}

TEST_CASE("minimal solution of a univariate equation") {
  CHECK(min_univariate(C(2) + scale(V(0), ExtNat(3)), 0) == Polynomial::constant(W));
  CHECK(min_univariate(C(2), 0) == C(2));
  CHECK(min_univariate(scale(V(0), ExtNat(5)), 0).is_zero());
  // y + y*x -> y + y*y*w
  Polynomial f = V(1) + V(1) * V(0);
  Polynomial g = min_univariate(f, 0);
  CHECK(g == V(1) + scale(V(1) * V(1), W));
  // f not mentioning x is its own answer
  CHECK(min_univariate(V(1) + C(1), 0) == V(1) + C(1));
}

TEST_CASE("solve_min on the worked system") {
  // x=xy+z^2, y=yz1, z1=2+yz1, z=2+y1z, y1=y1z
  // ids: x=0 y=1 z1=2 z=3 y1=4
  PSE s;
  s.names = {"x", "y", "z1", "z", "y1"};
  s.rhs = {V(0) * V(1) + V(3) * V(3), V(1) * V(2), C(2) + V(1) * V(2), C(2) + V(4) * V(3),
           V(4) * V(3)};
  auto sol = solve_min(s);
  CHECK(sol[0] == ExtNat(4));
  CHECK(sol[1] == ExtNat(0));
  CHECK(sol[2] == ExtNat(2));
  CHECK(sol[3] == ExtNat(2));
  CHECK(sol[4] == ExtNat(0));

  SUBCASE("the solution is a fixpoint") {
    for (std::size_t i = 0; i < s.size(); i++) CHECK(eval(s.rhs[i], sol) == sol[i]);
  }
  SUBCASE("kleene reaches it by depth 6") {
    auto k6 = kleene(s, 6);
    for (std::size_t i = 0; i < s.size(); i++) CHECK(k6[i] == sol[i]);
  }
  SUBCASE("boolean positivity image") {
    auto b = solve_bool(s);
    CHECK(b == std::vector<bool>{true, false, true, true, false});
  }
  SUBCASE("elimination order does not matter") {
    auto alt = solve_min(s, {0, 1, 2, 3, 4});
    auto alt2 = solve_min(s, {2, 0, 4, 1, 3});
    for (std::size_t i = 0; i < s.size(); i++) {
      CHECK(alt[i] == sol[i]);
      CHECK(alt2[i] == sol[i]);
    }
  }
}

TEST_CASE("solve_min edge cases") {
  PSE s;
  s.names = {"x"};
  s.rhs = {V(0)};
  CHECK(solve_min(s)[0] == ExtNat(0));

  PSE inc;
  inc.names = {"x"};
  inc.rhs = {V(0) + C(1)};
  CHECK(solve_min(inc)[0] == W);
  CHECK(kleene(inc, 3)[0] == ExtNat(3));
  CHECK(kleene(inc, 0)[0] == ExtNat(0));
  CHECK(solve_bool(inc)[0]);

  PSE empty;
  CHECK(solve_min(empty).empty());
}

TEST_CASE("random systems: chain, fixpoint, boolean agreement, order independence") {
  std::mt19937 rng(20240918);
  std::uniform_int_distribution<int> nv(1, 4);
  for (int iter = 0; iter < 150; iter++) {
    int n = nv(rng);
    PSE s;
    for (int i = 0; i < n; i++) {
      s.names.push_back("x" + std::to_string(i));
      s.rhs.push_back(random_poly(rng, n, 2, 2));
    }
    auto sol = solve_min(s);
    // fixpoint
    for (int i = 0; i < n; i++) CHECK(eval(s.rhs[static_cast<std::size_t>(i)], sol) == sol[static_cast<std::size_t>(i)]);
    // monotone chain below the least fixpoint
    auto prev = kleene(s, 0);
    for (int k = 1; k <= 8; k++) {
      auto cur = kleene(s, k);
      for (int i = 0; i < n; i++) {
        CHECK(prev[static_cast<std::size_t>(i)] <= cur[static_cast<std::size_t>(i)]);
        CHECK(cur[static_cast<std::size_t>(i)] <= sol[static_cast<std::size_t>(i)]);
      }
      prev = cur;
    }
    // all-finite solutions are reached by bounded iteration
    bool finite = true;
    std::uint64_t total = 0;
    for (auto& v : sol) {
      if (v.is_omega()) finite = false;
      else total += v.value();
    }
    if (finite) {
      auto it = kleene(s, static_cast<int>(total) + 1);
      for (int i = 0; i < n; i++) CHECK(it[static_cast<std::size_t>(i)] == sol[static_cast<std::size_t>(i)]);
    }
    // boolean agreement
    auto b = solve_bool(s);
    for (int i = 0; i < n; i++) CHECK(b[static_cast<std::size_t>(i)] == !sol[static_cast<std::size_t>(i)].is_zero());
    // order independence
    std::vector<VarId> order;
    for (int i = 0; i < n; i++) order.push_back(i);
    std::shuffle(order.begin(), order.end(), rng);
    auto alt = solve_min(s, order);
    for (int i = 0; i < n; i++) CHECK(alt[static_cast<std::size_t>(i)] == sol[static_cast<std::size_t>(i)]);
  }
}
