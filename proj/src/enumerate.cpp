#include "proofcount/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "proofcount/check.hpp"

namespace pc {

namespace {

std::string fresh_in(const Goal& g, const std::string& prefix) {
  auto used = [&](const std::string& n) {
    for (auto& h : g.lambda_hyps)
      if (h.name == n) return true;
    for (auto& h : g.mu_hyps)
      if (h.name == n) return true;
    return false;
  };
  for (int k = 0;; k++) {
    std::string n = prefix + std::to_string(k);
    if (!used(n)) return n;
  }
}

struct CanonInfo {
  Goal canon;
  std::vector<std::pair<std::string, std::string>> canon_to_actual;
  std::string key;
};

CanonInfo canonicalize(const Goal& g) {
  CanonInfo out;
  out.canon.conclusion = g.conclusion;

  auto sorted = [](const std::vector<Hyp>& hs) {
    std::vector<std::pair<std::string, const Hyp*>> v;
    for (auto& h : hs) v.push_back({render(h.type), &h});
    std::stable_sort(v.begin(), v.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };

  std::string key = render(g.conclusion) + " |-";
  int i = 0;
  for (auto& [r, h] : sorted(g.lambda_hyps)) {
    std::string cn = "h" + std::to_string(i++);
    out.canon.lambda_hyps.push_back({cn, h->type});
    out.canon_to_actual.push_back({cn, h->name});
    key += " " + r + ";";
  }
  key += " /";
  i = 0;
  for (auto& [r, h] : sorted(g.mu_hyps)) {
    std::string cn = "m" + std::to_string(i++);
    out.canon.mu_hyps.push_back({cn, h->type});
    out.canon_to_actual.push_back({cn, h->name});
    key += " " + r + ";";
  }
  out.key = key;
  return out;
}

}  // namespace

Enumerator::Entry& Enumerator::entry(const Goal& g,
                                     std::vector<std::pair<std::string, std::string>>* map_out,
                                     std::string* key_out) {
  CanonInfo ci = canonicalize(g);
  if (map_out) *map_out = ci.canon_to_actual;
  if (key_out) *key_out = ci.key;
  auto it = memo_.find(ci.key);
  if (it == memo_.end()) {
    auto e = std::make_unique<Entry>();
    e->canon = ci.canon;
    it = memo_.emplace(ci.key, std::move(e)).first;
  }
  return *it->second;
}

void Enumerator::build_prods(Entry& e) {
  if (e.prods_ready) return;
  e.prods_ready = true;
  const Goal& g = e.canon;
  const Formula& b = g.conclusion;

  auto with_conclusion = [&](const Formula& c) {
    Goal h = g;
    h.conclusion = c;
    return h;
  };

  switch (b->kind) {
    case FKind::Implies: {
      Prod p;
      p.tag = Prod::Tag::Lam;
      p.binder = fresh_in(g, "y");
      Goal h = with_conclusion(b->right);
      h.lambda_hyps.push_back({p.binder, b->left});
      p.children.push_back(std::move(h));
      e.prods.push_back(std::move(p));
      break;
    }
    case FKind::And: {
      Prod p;
      p.tag = Prod::Tag::Pair;
      p.children.push_back(with_conclusion(b->left));
      p.children.push_back(with_conclusion(b->right));
      e.prods.push_back(std::move(p));
      break;
    }
    case FKind::Or: {
      Prod p1;
      p1.tag = Prod::Tag::Inj1;
      p1.children.push_back(with_conclusion(b->left));
      e.prods.push_back(std::move(p1));
      Prod p2;
      p2.tag = Prod::Tag::Inj2;
      p2.children.push_back(with_conclusion(b->right));
      e.prods.push_back(std::move(p2));
      break;
    }
    default: break;
  }

  if (mode_.eta_long && (b->kind == FKind::Implies || b->kind == FKind::And)) return;

  // proof by contradiction, per logic mode
  if (mode_.logic == Logic::Classical && b->kind != FKind::Bottom && !is_negation(b)) {
    bool declared = false;
    for (auto& m : g.mu_hyps)
      if (formula_eq(m.type, b)) declared = true;
    if (!declared) {
      Prod p;
      p.tag = Prod::Tag::Mu;
      p.binder = fresh_in(g, "b");
      Goal h = with_conclusion(bottom());
      h.mu_hyps.push_back({p.binder, b});
      p.children.push_back(std::move(h));
      e.prods.push_back(std::move(p));
    }
  }
  if (mode_.logic == Logic::Intuitionistic && b->kind != FKind::Bottom) {
    // ex falso: a mu binder that the subproof cannot use
    Prod p;
    p.tag = Prod::Tag::ExFalso;
    p.binder = fresh_in(g, "b");
    p.children.push_back(with_conclusion(bottom()));
    e.prods.push_back(std::move(p));
  }

  // namings (a t) prove bottom
  if (b->kind == FKind::Bottom) {
    for (auto& m : g.mu_hyps) {
      Prod p;
      p.tag = Prod::Tag::Named;
      p.binder = m.name;
      p.children.push_back(with_conclusion(m.type));
      e.prods.push_back(std::move(p));
    }
  }

  // hypothesis spines
  for (std::size_t idx = 0; idx < g.lambda_hyps.size(); idx++) {
    const Hyp& hyp = g.lambda_hyps[idx];
    for (const ElimList& l : elim(hyp.type, b)) {
      Prod p;
      p.tag = Prod::Tag::Spine;
      p.head = hyp.name;
      p.steps = l.steps;
      p.star = l.star;
      p.min_size = (l.steps.empty() && l.star) ? 1 : 2;
      for (const ElimStep& s : l.steps)
        if (s.kind == ElimStep::Kind::Subgoal) p.children.push_back(with_conclusion(s.goal));
      if (!l.star) {
        Goal base = g;
        base.lambda_hyps.erase(base.lambda_hyps.begin() + static_cast<long>(idx));
        p.bv1 = fresh_in(base, "y");
        p.bv2 = p.bv1;
        Goal h1 = base, h2 = base;
        h1.lambda_hyps.push_back({p.bv1, l.d1});
        h2.lambda_hyps.push_back({p.bv2, l.d2});
        p.children.push_back(std::move(h1));
        p.children.push_back(std::move(h2));
      }
      e.prods.push_back(std::move(p));
    }
  }
}

Term Enumerator::assemble(const Prod& p, const std::vector<Term>& kids) const {
  switch (p.tag) {
    case Prod::Tag::Lam: return tlam(p.binder, kids[0]);
    case Prod::Tag::Pair: return tpair(kids[0], kids[1]);
    case Prod::Tag::Inj1: return tinj(1, kids[0]);
    case Prod::Tag::Inj2: return tinj(2, kids[0]);
    case Prod::Tag::Mu:
    case Prod::Tag::ExFalso:
      return tmu(p.binder, kids[0]);
    case Prod::Tag::Named: return tnamed(p.binder, kids[0]);
    case Prod::Tag::Spine: {
      Term t = tvar(p.head);
      std::size_t ci = 0;
      for (const ElimStep& s : p.steps) {
        if (s.kind == ElimStep::Kind::Subgoal)
          t = tapp(t, earg_term(kids[ci++]));
        else
          t = tapp(t, earg_proj(s.proj_index));
      }
      if (!p.star) {
        t = tapp(t, earg_case(p.bv1, kids[ci], p.bv2, kids[ci + 1]));
        ci += 2;
      }
      return t;
    }
  }
  return nullptr;
}

ExtNat Enumerator::cumulative_key(const std::string& key, int k) {
  if (k <= 0) return ExtNat(0);
  {
    Entry& e = *memo_.at(key);
    auto it = e.counts.find(k);
    if (it != e.counts.end()) return it->second;
    build_prods(e);
  }
  // collect child keys first (entry() may insert into the memo)
  std::vector<std::pair<int, std::vector<std::string>>> plan;  // (min_size, child keys)
  {
    Entry& e = *memo_.at(key);
    for (const Prod& p : e.prods) {
      std::vector<std::string> ck;
      for (const Goal& c : p.children) {
        std::string cw;
        entry(c, nullptr, &cw);
        ck.push_back(std::move(cw));
      }
      plan.push_back({p.min_size, std::move(ck)});
    }
  }
  ExtNat total(0);
  for (auto& [min_size, children] : plan) {
    if (k < min_size) continue;
    ExtNat prod(1);
    for (const std::string& ck : children) {
      prod *= cumulative_key(ck, k - 1);
      if (prod.is_zero()) break;
    }
    total += prod;
  }
  memo_.at(key)->counts[k] = total;
  return total;
}

const std::vector<Term>& Enumerator::terms_key(const std::string& key, int k) {
  if (k <= 0) {
    static const std::vector<Term> empty;
    return empty;
  }
  {
    Entry& e = *memo_.at(key);
    auto it = e.terms.find(k);
    if (it != e.terms.end()) return it->second;
    build_prods(e);
  }
  std::vector<Term> out;
  std::size_t nprods = memo_.at(key)->prods.size();
  for (std::size_t pi = 0; pi < nprods; pi++) {
    Prod p = memo_.at(key)->prods[pi];  // copy: recursion may rehash
    if (k < p.min_size) continue;
    std::vector<std::vector<Term>> kid_terms;
    bool dead = false;
    for (const Goal& c : p.children) {
      kid_terms.push_back(terms(c, k - 1));
      if (kid_terms.back().empty()) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    std::vector<std::size_t> ix(kid_terms.size(), 0);
    while (true) {
      std::vector<Term> kids;
      for (std::size_t i = 0; i < ix.size(); i++) kids.push_back(kid_terms[i][ix[i]]);
      out.push_back(alpha_canonical(assemble(p, kids)));
      std::size_t i = 0;
      for (; i < ix.size(); i++) {
        if (++ix[i] < kid_terms[i].size()) break;
        ix[i] = 0;
      }
      if (i == ix.size()) break;
      if (ix.empty()) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    int sa = term_size(a), sb = term_size(b);
    if (sa != sb) return sa < sb;
    return print_term(a) < print_term(b);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Term& a, const Term& b) { return term_eq(a, b); }),
            out.end());
  auto& slot = memo_.at(key)->terms[k];
  slot = std::move(out);
  return slot;
}

ExtNat Enumerator::cumulative(const Goal& g, int k) {
  std::string key;
  entry(g, nullptr, &key);
  return cumulative_key(key, k);
}

std::vector<Term> Enumerator::terms(const Goal& g, int k) {
  std::vector<std::pair<std::string, std::string>> map;
  std::string key;
  entry(g, &map, &key);
  const std::vector<Term>& canon = terms_key(key, k);
  std::erase_if(map, [](const auto& pr) { return pr.first == pr.second; });
  std::vector<Term> out;
  out.reserve(canon.size());
  for (const Term& t : canon) out.push_back(map.empty() ? t : rename_free(t, map));
  return out;
}

std::vector<ExtNat> Enumerator::by_size(const Goal& g, int k_max) {
  std::vector<ExtNat> d(static_cast<std::size_t>(k_max) + 1, ExtNat(0));
  ExtNat prev(0);
  for (int k = 1; k <= k_max; k++) {
    ExtNat c = cumulative(g, k);
    if (c.is_omega() || prev.is_omega())
      d[k] = ExtNat::omega();
    else
      d[k] = ExtNat(c.value() - prev.value());
    prev = c;
  }
  return d;
}

namespace {

Term pretty_rec(const Term& t, std::vector<std::pair<std::string, std::string>>& env,
                int& lam_ctr, int& mu_ctr, const std::set<std::string>& avoid) {
  auto lookup = [&](const std::string& n) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == n) return it->second;
    return n;
  };
  auto pick = [&](int& ctr, const char* prefix) {
    std::string n;
    do {
      n = prefix + std::to_string(ctr++);
    } while (avoid.count(n));
    return n;
  };
  switch (t->kind) {
    case TKind::Var: return tvar(lookup(t->name));
    case TKind::Named: return tnamed(lookup(t->name), pretty_rec(t->a, env, lam_ctr, mu_ctr, avoid));
    case TKind::Lam:
    case TKind::Mu: {
      std::string n = pick(t->kind == TKind::Lam ? lam_ctr : mu_ctr,
                           t->kind == TKind::Lam ? "x" : "a");
      env.push_back({t->name, n});
      Term body = pretty_rec(t->a, env, lam_ctr, mu_ctr, avoid);
      env.pop_back();
      return t->kind == TKind::Lam ? tlam(n, body) : tmu(n, body);
    }
    case TKind::Pair:
      return tpair(pretty_rec(t->a, env, lam_ctr, mu_ctr, avoid),
                   pretty_rec(t->b, env, lam_ctr, mu_ctr, avoid));
    case TKind::Inj: return tinj(t->index, pretty_rec(t->a, env, lam_ctr, mu_ctr, avoid));
    case TKind::App: {
      Term head = pretty_rec(t->a, env, lam_ctr, mu_ctr, avoid);
      const ElimArg& e = *t->earg;
      switch (e.kind) {
        case EKind::TermArg:
          return tapp(head, earg_term(pretty_rec(e.arg, env, lam_ctr, mu_ctr, avoid)));
        case EKind::Proj: return tapp(head, earg_proj(e.index));
        case EKind::Case: {
          std::string n1 = pick(lam_ctr, "x");
          env.push_back({e.v1, n1});
          Term b1 = pretty_rec(e.branch1, env, lam_ctr, mu_ctr, avoid);
          env.pop_back();
          std::string n2 = pick(lam_ctr, "x");
          env.push_back({e.v2, n2});
          Term b2 = pretty_rec(e.branch2, env, lam_ctr, mu_ctr, avoid);
          env.pop_back();
          return tapp(head, earg_case(n1, b1, n2, b2));
        }
      }
      return t;
    }
  }
  return t;
}

}  // namespace

Term prettify(const Term& t) {
  std::set<std::string> avoid;
  for (auto& n : free_vars(t)) avoid.insert(n);
  std::vector<std::pair<std::string, std::string>> env;
  int lam_ctr = 0, mu_ctr = 0;
  return pretty_rec(t, env, lam_ctr, mu_ctr, avoid);
}

}  // namespace pc
