#include "proofcount/check.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace pc {

namespace {

// ---------------------------------------------------------------------------
// Typechecking by unification. Formulae are embedded into mutable type cells
// so that checking is syntax-directed even where a rule does not determine a
// premise type (argument types of applications, the other side of an
// injection, ...). A metavariable left unconstrained at the end means any
// formula completes the derivation.

struct MT;
using MTp = std::shared_ptr<MT>;

struct MT {
  enum Kind { Meta, Atom, Bottom, Implies, And, Or } kind;
  std::string name;  // Atom
  MTp l, r;
  MTp link;  // Meta only, set when solved
};

MTp mt_meta() { return std::make_shared<MT>(MT{MT::Meta, "", nullptr, nullptr, nullptr}); }
MTp mt_make(MT::Kind k, MTp l = nullptr, MTp r = nullptr) {
  return std::make_shared<MT>(MT{k, "", std::move(l), std::move(r), nullptr});
}

MTp mt_resolve(MTp t) {
  while (t->kind == MT::Meta && t->link) t = t->link;
  return t;
}

MTp embed(const Formula& f) {
  switch (f->kind) {
    case FKind::Atom: {
      auto t = mt_make(MT::Atom);
      t->name = f->name;
      return t;
    }
    case FKind::Bottom: return mt_make(MT::Bottom);
    case FKind::Implies: return mt_make(MT::Implies, embed(f->left), embed(f->right));
    case FKind::And: return mt_make(MT::And, embed(f->left), embed(f->right));
    case FKind::Or: return mt_make(MT::Or, embed(f->left), embed(f->right));
  }
  return nullptr;
}

bool occurs(const MTp& meta, MTp t) {
  t = mt_resolve(std::move(t));
  if (t.get() == meta.get()) return true;
  if (t->l && occurs(meta, t->l)) return true;
  if (t->r && occurs(meta, t->r)) return true;
  return false;
}

bool unify(MTp a, MTp b) {
  a = mt_resolve(std::move(a));
  b = mt_resolve(std::move(b));
  if (a.get() == b.get()) return true;
  if (a->kind == MT::Meta) {
    if (occurs(a, b)) return false;
    a->link = b;
    return true;
  }
  if (b->kind == MT::Meta) return unify(b, a);
  if (a->kind != b->kind) return false;
  if (a->kind == MT::Atom) return a->name == b->name;
  if (a->kind == MT::Bottom) return true;
  return unify(a->l, b->l) && unify(a->r, b->r);
}

// Residual metas become fresh atoms (any instantiation yields a derivation).
Formula reify(MTp t, std::map<const MT*, Formula>& fresh, int& counter) {
  t = mt_resolve(std::move(t));
  switch (t->kind) {
    case MT::Meta: {
      auto it = fresh.find(t.get());
      if (it != fresh.end()) return it->second;
      Formula a = atom("_m" + std::to_string(counter++));
      fresh.emplace(t.get(), a);
      return a;
    }
    case MT::Atom: return atom(t->name);
    case MT::Bottom: return bottom();
    case MT::Implies: return implies(reify(t->l, fresh, counter), reify(t->r, fresh, counter));
    case MT::And: return conj(reify(t->l, fresh, counter), reify(t->r, fresh, counter));
    case MT::Or: return disj(reify(t->l, fresh, counter), reify(t->r, fresh, counter));
  }
  return nullptr;
}

struct SubtermRec {
  const TermNode* node;
  MTp type;
  bool applied;  // head of an elimination
};
struct MuRec {
  const TermNode* node;
  MTp type;
  std::vector<MTp> enclosing;  // ~A declarations in scope at this node
};

class Checker {
public:
  explicit Checker(const Goal& g) {
    for (const auto& h : g.lambda_hyps) scope_.push_back({h.name, embed(h.type), false});
    for (const auto& h : g.mu_hyps) {
      MTp t = embed(h.type);
      scope_.push_back({h.name, t, true});
      mu_scope_.push_back(t);
    }
  }

  bool run(const Term& t, const Formula& conclusion) {
    return check(t, embed(conclusion), false);
  }

  std::vector<SubtermRec> subterms;
  std::vector<MuRec> mus;
  const TermNode* fail_node = nullptr;
  std::string fail_msg;

private:
  struct Entry {
    std::string name;
    MTp type;  // for mu entries: the A of a : ~A
    bool is_mu;
  };
  std::vector<Entry> scope_;
  std::vector<MTp> mu_scope_;

  const Entry* lookup(const std::string& n) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == n) return &*it;
    return nullptr;
  }

  bool fail(const Term& t, const std::string& msg) {
    if (!fail_node) {
      fail_node = t.get();
      fail_msg = msg;
    }
    return false;
  }

  bool check(const Term& t, MTp expected, bool applied) {
    subterms.push_back({t.get(), expected, applied});
    switch (t->kind) {
      case TKind::Var: {
        const Entry* e = lookup(t->name);
        if (!e) return fail(t, "unbound variable '" + t->name + "'");
        if (e->is_mu) return fail(t, "mu name '" + t->name + "' used as a term");
        if (!unify(expected, e->type)) return fail(t, "type of '" + t->name + "' does not match");
        return true;
      }
      case TKind::Lam: {
        MTp a = mt_meta(), b = mt_meta();
        if (!unify(expected, mt_make(MT::Implies, a, b)))
          return fail(t, "abstraction at non-arrow type");
        scope_.push_back({t->name, a, false});
        bool ok = check(t->a, b, false);
        scope_.pop_back();
        return ok;
      }
      case TKind::Pair: {
        MTp a = mt_meta(), b = mt_meta();
        if (!unify(expected, mt_make(MT::And, a, b)))
          return fail(t, "pair at non-conjunctive type");
        return check(t->a, a, false) && check(t->b, b, false);
      }
      case TKind::Inj: {
        MTp a = mt_meta(), b = mt_meta();
        if (!unify(expected, mt_make(MT::Or, a, b)))
          return fail(t, "injection at non-disjunctive type");
        return check(t->a, t->index == 1 ? a : b, false);
      }
      case TKind::Mu: {
        mus.push_back({t.get(), expected, mu_scope_});
        scope_.push_back({t->name, expected, true});
        mu_scope_.push_back(expected);
        bool ok = check(t->a, mt_make(MT::Bottom), false);
        mu_scope_.pop_back();
        scope_.pop_back();
        return ok;
      }
      case TKind::Named: {
        const Entry* e = lookup(t->name);
        if (!e) return fail(t, "unbound mu name '" + t->name + "'");
        if (!e->is_mu) return fail(t, "'" + t->name + "' is not a mu name");
        if (!unify(expected, mt_make(MT::Bottom)))
          return fail(t, "naming at non-bottom type");
        return check(t->a, e->type, false);
      }
      case TKind::App: {
        const ElimArg& e = *t->earg;
        switch (e.kind) {
          case EKind::TermArg: {
            MTp a = mt_meta();
            return check(t->a, mt_make(MT::Implies, a, expected), true) && check(e.arg, a, false);
          }
          case EKind::Proj: {
            MTp a1 = mt_meta(), a2 = mt_meta();
            if (!check(t->a, mt_make(MT::And, a1, a2), true)) return false;
            if (!unify(expected, e.index == 1 ? a1 : a2))
              return fail(t, "projection type mismatch");
            return true;
          }
          case EKind::Case: {
            MTp a1 = mt_meta(), a2 = mt_meta();
            if (!check(t->a, mt_make(MT::Or, a1, a2), true)) return false;
            scope_.push_back({e.v1, a1, false});
            bool ok = check(e.branch1, expected, false);
            scope_.pop_back();
            if (!ok) return false;
            scope_.push_back({e.v2, a2, false});
            ok = check(e.branch2, expected, false);
            scope_.pop_back();
            return ok;
          }
        }
        return false;
      }
    }
    return false;
  }
};

}  // namespace

bool typecheck(const Goal& g, const Term& t) {
  Checker c(g);
  return c.run(t, g.conclusion);
}

std::optional<std::string> typecheck_diag(const Goal& g, const Term& t) {
  Checker c(g);
  if (c.run(t, g.conclusion)) return std::nullopt;
  return c.fail_msg;
}

// ---------------------------------------------------------------------------
// Normality and reduction

namespace {

bool root_redex(const TermNode* t) {
  if (t->kind != TKind::App) return false;
  const TermNode* h = t->a.get();
  const ElimArg& e = *t->earg;
  if (h->kind == TKind::Lam && e.kind == EKind::TermArg) return true;   // beta
  if (h->kind == TKind::Pair && e.kind == EKind::Proj) return true;     // projection
  if (h->kind == TKind::Inj && e.kind == EKind::Case) return true;      // case
  if (h->kind == TKind::App && h->earg->kind == EKind::Case) return true;  // permutative
  if (h->kind == TKind::Mu) return true;                                // classical cut
  return false;
}

bool normal_rec(const Term& t) {
  if (root_redex(t.get())) return false;
  switch (t->kind) {
    case TKind::Var: return true;
    case TKind::Lam:
    case TKind::Mu:
    case TKind::Named:
    case TKind::Inj:
      return normal_rec(t->a);
    case TKind::Pair: return normal_rec(t->a) && normal_rec(t->b);
    case TKind::App: {
      if (!normal_rec(t->a)) return false;
      const ElimArg& e = *t->earg;
      if (e.kind == EKind::TermArg) return normal_rec(e.arg);
      if (e.kind == EKind::Case) return normal_rec(e.branch1) && normal_rec(e.branch2);
      return true;
    }
  }
  return true;
}

class Reducer {
public:
  // Capture-avoiding substitution of a term for a lambda variable.
  Term subst(const Term& t, const std::string& x, const Term& n) {
    avoid_.clear();
    for (auto& v : free_vars(n)) avoid_.insert(v);
    avoid_.insert(x);
    return subst_rec(t, x, n);
  }

  // M[(a L) := (a (L eps))], stopping under rebindings of a.
  Term mu_apply(const Term& t, const std::string& a, const ElimArgPtr& eps) {
    avoid_.clear();
    if (eps->kind == EKind::TermArg)
      for (auto& v : free_vars(eps->arg)) avoid_.insert(v);
    if (eps->kind == EKind::Case) {
      for (auto& v : free_vars(eps->branch1)) avoid_.insert(v);
      for (auto& v : free_vars(eps->branch2)) avoid_.insert(v);
      avoid_.insert(eps->v1);
      avoid_.insert(eps->v2);
    }
    return mu_rec(t, a, eps);
  }

private:
  std::set<std::string> avoid_;
  int counter_ = 0;

  std::string fresh(const Term& body) {
    std::set<std::string> used = avoid_;
    for (auto& v : free_vars(body)) used.insert(v);
    std::string n;
    do {
      n = "r" + std::to_string(counter_++);
    } while (used.count(n));
    return n;
  }

  Term subst_rec(const Term& t, const std::string& x, const Term& n) {
    switch (t->kind) {
      case TKind::Var: return t->name == x ? n : t;
      case TKind::Named:
        // names live in the other namespace; only the body is substituted
        return t->name == x ? t : tnamed(t->name, subst_rec(t->a, x, n));
      case TKind::Lam:
      case TKind::Mu: {
        if (t->name == x) return t;  // shadowed
        std::string b = t->name;
        Term body = t->a;
        if (avoid_.count(b)) {
          std::string b2 = fresh(body);
          body = rename_free(body, {{b, b2}});
          b = b2;
        }
        Term nb = subst_rec(body, x, n);
        return t->kind == TKind::Lam ? tlam(b, nb) : tmu(b, nb);
      }
      case TKind::Pair: return tpair(subst_rec(t->a, x, n), subst_rec(t->b, x, n));
      case TKind::Inj: return tinj(t->index, subst_rec(t->a, x, n));
      case TKind::App: {
        Term head = subst_rec(t->a, x, n);
        const ElimArg& e = *t->earg;
        switch (e.kind) {
          case EKind::TermArg: return tapp(head, earg_term(subst_rec(e.arg, x, n)));
          case EKind::Proj: return tapp(head, earg_proj(e.index));
          case EKind::Case: {
            auto branch = [&](const std::string& v, const Term& b) -> std::pair<std::string, Term> {
              if (v == x) return {v, b};
              std::string v2 = v;
              Term body = b;
              if (avoid_.count(v2)) {
                std::string f = fresh(body);
                body = rename_free(body, {{v2, f}});
                v2 = f;
              }
              return {v2, subst_rec(body, x, n)};
            };
            auto [v1, b1] = branch(e.v1, e.branch1);
            auto [v2, b2] = branch(e.v2, e.branch2);
            return tapp(head, earg_case(v1, b1, v2, b2));
          }
        }
        return t;
      }
    }
    return t;
  }

  Term mu_rec(const Term& t, const std::string& a, const ElimArgPtr& eps) {
    switch (t->kind) {
      case TKind::Var: return t;
      case TKind::Named: {
        Term body = mu_rec(t->a, a, eps);
        if (t->name == a) return tnamed(t->name, tapp(body, eps));
        return tnamed(t->name, body);
      }
      case TKind::Lam:
      case TKind::Mu: {
        if (t->kind == TKind::Mu && t->name == a) return t;  // rebinding shadows
        std::string b = t->name;
        Term body = t->a;
        if (avoid_.count(b)) {
          std::string b2 = fresh(body);
          body = rename_free(body, {{b, b2}});
          b = b2;
        }
        Term nb = mu_rec(body, a, eps);
        return t->kind == TKind::Lam ? tlam(b, nb) : tmu(b, nb);
      }
      case TKind::Pair: return tpair(mu_rec(t->a, a, eps), mu_rec(t->b, a, eps));
      case TKind::Inj: return tinj(t->index, mu_rec(t->a, a, eps));
      case TKind::App: {
        Term head = mu_rec(t->a, a, eps);
        const ElimArg& e = *t->earg;
        switch (e.kind) {
          case EKind::TermArg: return tapp(head, earg_term(mu_rec(e.arg, a, eps)));
          case EKind::Proj: return tapp(head, earg_proj(e.index));
          case EKind::Case: {
            auto branch = [&](const std::string& v, const Term& b) -> std::pair<std::string, Term> {
              std::string v2 = v;
              Term body = b;
              if (avoid_.count(v2)) {
                std::string f = fresh(body);
                body = rename_free(body, {{v2, f}});
                v2 = f;
              }
              return {v2, mu_rec(body, a, eps)};
            };
            auto [v1, b1] = branch(e.v1, e.branch1);
            auto [v2, b2] = branch(e.v2, e.branch2);
            return tapp(head, earg_case(v1, b1, v2, b2));
          }
        }
        return t;
      }
    }
    return t;
  }
};

Term contract(const Term& t) {
  const TermNode* h = t->a.get();
  const ElimArg& e = *t->earg;
  Reducer red;
  if (h->kind == TKind::Lam && e.kind == EKind::TermArg)
    return red.subst(t->a->a, h->name, e.arg);
  if (h->kind == TKind::Pair && e.kind == EKind::Proj)
    return e.index == 1 ? t->a->a : t->a->b;
  if (h->kind == TKind::Inj && e.kind == EKind::Case)
    return red.subst(h->index == 1 ? e.branch1 : e.branch2, h->index == 1 ? e.v1 : e.v2, t->a->a);
  if (h->kind == TKind::App && h->earg->kind == EKind::Case) {
    // (M [x1.N1, x2.N2] eps) -> (M [x1.(N1 eps), x2.(N2 eps)])
    const ElimArg& c = *h->earg;
    ElimArgPtr eps = t->earg;
    std::set<std::string> fv;
    if (eps->kind == EKind::TermArg)
      for (auto& v : free_vars(eps->arg)) fv.insert(v);
    if (eps->kind == EKind::Case) {
      for (auto& v : free_vars(eps->branch1)) fv.insert(v);
      for (auto& v : free_vars(eps->branch2)) fv.insert(v);
    }
    auto branch = [&](const std::string& v, const Term& b, int salt) -> std::pair<std::string, Term> {
      std::string v2 = v;
      Term body = b;
      if (fv.count(v2)) {
        std::string f = "p" + std::to_string(salt);
        while (fv.count(f)) f += "_";
        body = rename_free(body, {{v2, f}});
        v2 = f;
      }
      return {v2, tapp(body, eps)};
    };
    auto [v1, b1] = branch(c.v1, c.branch1, 0);
    auto [v2, b2] = branch(c.v2, c.branch2, 1);
    return tapp(h->a, earg_case(v1, b1, v2, b2));
  }
  if (h->kind == TKind::Mu)
    return tmu(h->name, red.mu_apply(t->a->a, h->name, t->earg));
  throw std::logic_error("contract: not a redex");
}

std::optional<Term> step_rec(const Term& t) {
  if (root_redex(t.get())) return contract(t);
  switch (t->kind) {
    case TKind::Var: return std::nullopt;
    case TKind::Lam:
      if (auto r = step_rec(t->a)) return tlam(t->name, *r);
      return std::nullopt;
    case TKind::Mu:
      if (auto r = step_rec(t->a)) return tmu(t->name, *r);
      return std::nullopt;
    case TKind::Named:
      if (auto r = step_rec(t->a)) return tnamed(t->name, *r);
      return std::nullopt;
    case TKind::Inj:
      if (auto r = step_rec(t->a)) return tinj(t->index, *r);
      return std::nullopt;
    case TKind::Pair:
      if (auto r = step_rec(t->a)) return tpair(*r, t->b);
      if (auto r = step_rec(t->b)) return tpair(t->a, *r);
      return std::nullopt;
    case TKind::App: {
      if (auto r = step_rec(t->a)) return tapp(*r, t->earg);
      const ElimArg& e = *t->earg;
      if (e.kind == EKind::TermArg) {
        if (auto r = step_rec(e.arg)) return tapp(t->a, earg_term(*r));
      } else if (e.kind == EKind::Case) {
        if (auto r = step_rec(e.branch1)) return tapp(t->a, earg_case(e.v1, *r, e.v2, e.branch2));
        if (auto r = step_rec(e.branch2)) return tapp(t->a, earg_case(e.v1, e.branch1, e.v2, *r));
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_normal(const Term& t) { return normal_rec(t); }

std::optional<Term> reduce_step(const Term& t) { return step_rec(t); }

int term_size(const Term& t) {
  switch (t->kind) {
    case TKind::Var: return 1;
    case TKind::Lam:
    case TKind::Mu:
    case TKind::Inj:
    case TKind::Named:
      return term_size(t->a) + 1;
    case TKind::Pair: return std::max(term_size(t->a), term_size(t->b)) + 1;
    case TKind::App: {
      // flatten the spine; projections count 1, case branches enter the max
      int m = 0;
      const TermNode* h = t.get();
      while (h->kind == TKind::App) {
        const ElimArg& e = *h->earg;
        switch (e.kind) {
          case EKind::TermArg: m = std::max(m, term_size(e.arg)); break;
          case EKind::Proj: m = std::max(m, 1); break;
          case EKind::Case:
            m = std::max({m, term_size(e.branch1), term_size(e.branch2)});
            break;
        }
        h = h->a.get();
      }
      if (h->kind != TKind::Var) {
        Term head = t;
        while (head->kind == TKind::App) head = head->a;
        m = std::max(m, term_size(head));
      }
      return m + 1;
    }
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Fairness and eta-long form

namespace {

void collect_case_elims(const Term& t, std::vector<const TermNode*>& out) {
  switch (t->kind) {
    case TKind::Var: return;
    case TKind::Lam:
    case TKind::Mu:
    case TKind::Named:
    case TKind::Inj:
      collect_case_elims(t->a, out);
      return;
    case TKind::Pair:
      collect_case_elims(t->a, out);
      collect_case_elims(t->b, out);
      return;
    case TKind::App: {
      collect_case_elims(t->a, out);
      const ElimArg& e = *t->earg;
      if (e.kind == EKind::TermArg) collect_case_elims(e.arg, out);
      if (e.kind == EKind::Case) {
        out.push_back(t.get());
        collect_case_elims(e.branch1, out);
        collect_case_elims(e.branch2, out);
      }
      return;
    }
  }
}

bool occurs_free(const Term& t, const std::string& x) {
  auto fv = free_vars(t);
  return std::find(fv.begin(), fv.end(), x) != fv.end();
}

}  // namespace

bool is_fair(const Goal& g, const Term& t) {
  Checker c(g);
  if (!c.run(t, g.conclusion))
    throw std::logic_error("is_fair: term does not typecheck against the goal");

  // (a) case splits consume the hypothesis they eliminate
  std::vector<const TermNode*> elims;
  collect_case_elims(t, elims);
  for (const TermNode* app : elims) {
    const TermNode* head = app->a.get();
    while (head->kind == TKind::App) head = head->a.get();
    if (head->kind != TKind::Var) continue;
    const ElimArg& e = *app->earg;
    if (occurs_free(e.branch1, head->name) || occurs_free(e.branch2, head->name)) return false;
  }

  // (b), (c) from the mu nodes of the derivation
  std::map<const MT*, Formula> fresh;
  int counter = 0;
  for (const auto& m : c.mus) {
    Formula b = reify(m.type, fresh, counter);
    if (b->kind == FKind::Bottom || is_negation(b)) return false;
    for (const auto& enc : m.enclosing)
      if (formula_eq(reify(enc, fresh, counter), b)) return false;
  }
  return true;
}

bool is_eta_long(const Goal& g, const Term& t) {
  if (!is_normal(t)) throw std::logic_error("is_eta_long: term is not normal");
  Checker c(g);
  if (!c.run(t, g.conclusion))
    throw std::logic_error("is_eta_long: term does not typecheck against the goal");
  std::map<const MT*, Formula> fresh;
  int counter = 0;
  for (const auto& s : c.subterms) {
    if (s.applied) continue;  // heads of eliminations are exempt
    Formula ty = reify(s.type, fresh, counter);
    if (ty->kind == FKind::Implies && s.node->kind != TKind::Lam) return false;
    if (ty->kind == FKind::And && s.node->kind != TKind::Pair) return false;
  }
  return true;
}

}  // namespace pc
