#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proofcount/extnat.hpp"

namespace pc {

using VarId = int;

// Power product, canonical: variable ids strictly increasing, exponents > 0.
struct Monomial {
  std::vector<std::pair<VarId, int>> powers;

  int degree() const;
  bool operator==(const Monomial& o) const { return powers == o.powers; }
};

// Graded lexicographic order (total degree first, then lex on exponents).
bool monomial_lt(const Monomial& a, const Monomial& b);

// Canonical polynomial over ExtNat: monomials in decreasing graded-lex order,
// all coefficients nonzero. Coefficients may be omega.
class Polynomial {
public:
  std::vector<std::pair<Monomial, ExtNat>> terms;

  static Polynomial zero() { return {}; }
  static Polynomial constant(ExtNat c);
  static Polynomial variable(VarId x);

  bool is_zero() const { return terms.empty(); }
  // Constant term (coefficient of the empty monomial, 0 if absent).
  ExtNat constant_term() const;
  int degree() const;
  std::vector<VarId> vars() const;

  bool operator==(const Polynomial& o) const { return terms == o.terms; }
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, ExtNat c);

ExtNat eval(const Polynomial& p, const std::vector<ExtNat>& env);
// Substitutes a polynomial for one variable.
Polynomial subst(const Polynomial& p, VarId x, const Polynomial& g);

std::string poly_str(const Polynomial& p, const std::vector<std::string>& names);

// A polynomial system of equations x_i = rhs[i], i = 0..n-1.
struct PSE {
  std::vector<std::string> names;  // display names, size n
  std::vector<Polynomial> rhs;     // size n

  std::size_t size() const { return rhs.size(); }
};

// Minimal solution of x = f(x, ...) viewed as univariate in x with polynomial
// coefficients: f0 + f0 * (sum of higher coefficients) * omega, where f0 is
// the degree-0 part. The result does not mention x.
Polynomial min_univariate(const Polynomial& f, VarId x);

// Least solution of the system, by successive elimination (in the given
// order, default: highest id first) followed by back substitution.
std::vector<ExtNat> solve_min(const PSE& s, const std::vector<VarId>& order = {});

// k-fold iteration of the system on the zero vector.
std::vector<ExtNat> kleene(const PSE& s, int k);

// Positivity over the Boolean semiring (1 + 1 = 1): component i is true iff
// the least solution has x_i > 0. Computed by independent fixpoint iteration.
std::vector<bool> solve_bool(const PSE& s);

}  // namespace pc
