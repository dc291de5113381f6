#pragma once

#include <optional>
#include <string>

#include "proofcount/formula.hpp"
#include "proofcount/term.hpp"

namespace pc {

// Derivability of lambda_ctx, mu_ctx |- t : conclusion. Contexts are
// additive: every hypothesis is available in every premise.
bool typecheck(const Goal& g, const Term& t);
// Diagnostic variant: nullopt on success, otherwise a description of the
// first failing subterm.
std::optional<std::string> typecheck_diag(const Goal& g, const Term& t);

// True iff no subterm matches any of the five redex shapes.
bool is_normal(const Term& t);

// Contracts the leftmost-outermost redex, or returns nullopt when normal.
std::optional<Term> reduce_step(const Term& t);

// Size of a (normal) proof term. Total on all terms.
int term_size(const Term& t);

// Fairness of a typed proof: (a) a case split on a hypothesis consumes it,
// (b) no mu at bottom or a negated conclusion, (c) no mu at B inside the
// scope of a mu name already declared for ~B.
// Precondition: typecheck(g, t). Throws std::logic_error otherwise.
bool is_fair(const Goal& g, const Term& t);

// Eta-long: every arrow-typed subterm is an abstraction or the head of an
// elimination; every conjunctive subterm is a pair or such a head.
// Precondition: typecheck(g, t) and is_normal(t).
bool is_eta_long(const Goal& g, const Term& t);

}  // namespace pc
