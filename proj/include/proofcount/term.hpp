#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "proofcount/formula.hpp"

namespace pc {

// Lambda-mu proof terms.
//
//   T ::= x | \x. T | (T E) | <T, T> | w1 T | w2 T | mu a. T | (a T)
//   E ::= T | pi1 | pi2 | [x.T, y.T]
//
// Lambda variables and mu names live in disjoint namespaces; which one an
// identifier belongs to is determined by its binder (or the goal context).
enum class TKind { Var, Lam, App, Pair, Inj, Mu, Named };
enum class EKind { TermArg, Proj, Case };

class TermNode;
using Term = std::shared_ptr<const TermNode>;

struct ElimArg {
  EKind kind;
  Term arg;                 // TermArg
  int index = 0;            // Proj: 1 or 2
  std::string v1, v2;       // Case binders
  Term branch1, branch2;    // Case bodies
};
using ElimArgPtr = std::shared_ptr<const ElimArg>;

class TermNode {
public:
  TKind kind;
  std::string name;   // Var, Lam, Mu, Named
  Term a, b;          // a: body/head/fst, b: snd
  int index = 0;      // Inj: 1 or 2
  ElimArgPtr earg;    // App
};

Term tvar(std::string name);
Term tlam(std::string name, Term body);
Term tapp(Term head, ElimArgPtr arg);
Term tpair(Term fst, Term snd);
Term tinj(int index, Term body);
Term tmu(std::string name, Term body);
Term tnamed(std::string name, Term body);

ElimArgPtr earg_term(Term t);
ElimArgPtr earg_proj(int index);
ElimArgPtr earg_case(std::string v1, Term b1, std::string v2, Term b2);

// A goal: conclusion plus a context. A mu entry (a, A) declares a : ~A.
struct Hyp {
  std::string name;
  Formula type;
};

struct Goal {
  Formula conclusion;
  std::vector<Hyp> lambda_hyps;
  std::vector<Hyp> mu_hyps;

  const Formula* lambda_type(const std::string& n) const;
  const Formula* mu_type(const std::string& n) const;
};

Goal goal_of(Formula conclusion);

std::string print_term(const Term& t);
// Parses the concrete term syntax. Free identifiers are classified by the
// goal context; an identifier neither bound nor in the context is an error.
Term parse_term(std::string_view text, const Goal& g);

// Free variables of both namespaces.
std::vector<std::string> free_vars(const Term& t);

// Renames free occurrences (both namespaces) according to the map. The map's
// target names must not collide with bound names of t.
Term rename_free(const Term& t, const std::vector<std::pair<std::string, std::string>>& map);

// Canonical alpha form: bound names replaced by "_b0", "_b1", ... in
// traversal order; free names untouched. Structural equality on canonical
// forms is alpha-equivalence (with free variables compared by identity).
Term alpha_canonical(const Term& t);
bool term_eq(const Term& a, const Term& b);                 // syntactic
bool alpha_eq(const Term& a, const Term& b);

}  // namespace pc
