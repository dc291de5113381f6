#include "proofcount/pse_gen.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace pc {

namespace {

std::vector<Formula> erased_types(const std::vector<Hyp>& hyps) {
  std::vector<Formula> v;
  v.reserve(hyps.size());
  for (const auto& h : hyps) v.push_back(h.type);
  std::sort(v.begin(), v.end(), formula_lt);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const Formula& a, const Formula& b) { return formula_eq(a, b); }),
          v.end());
  return v;
}

bool same_types(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); i++)
    if (!formula_eq(a[i], b[i])) return false;
  return true;
}

std::string fresh_name(const Goal& g, const std::string& prefix) {
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

class Builder {
public:
  Builder(const Goal& root, Mode mode) : mode_(mode) {
    alloc(root, {});
  }

  BuildResult run() {
    while (!worklist_.empty()) {
      int i = worklist_.front();
      worklist_.pop_front();
      process(i);
    }
    BuildResult r;
    r.root = 0;
    r.goals = goals_;
    r.contracted = contracted_;
    r.system.rhs = eqs_;
    for (std::size_t i = 0; i < goals_.size(); i++)
      r.system.names.push_back("n" + std::to_string(i));
    return r;
  }

private:
  Mode mode_;
  std::vector<Goal> goals_;
  std::vector<std::set<int>> downsets_;
  std::vector<std::vector<Formula>> lam_erased_, mu_erased_;
  std::vector<Polynomial> eqs_;
  std::deque<int> worklist_;

  // reuse state for the equation currently being generated
  int current_ = -1;
  std::vector<std::pair<Goal, int>> step_memo_;
  bool contracted_ = false;

  static std::vector<Formula> multiset_types(const std::vector<Hyp>& hyps) {
    std::vector<Formula> v;
    v.reserve(hyps.size());
    for (const auto& h : hyps) v.push_back(h.type);
    std::sort(v.begin(), v.end(), formula_lt);
    return v;
  }

  void note_reuse(int id, const Goal& h) {
    if (contracted_) return;
    if (!same_types(multiset_types(goals_[static_cast<std::size_t>(id)].lambda_hyps),
                    multiset_types(h.lambda_hyps)) ||
        !same_types(multiset_types(goals_[static_cast<std::size_t>(id)].mu_hyps),
                    multiset_types(h.mu_hyps)))
      contracted_ = true;
  }

  bool equiv(int id, const Goal& h, const std::vector<Formula>& hl,
             const std::vector<Formula>& hm) const {
    return formula_eq(goals_[id].conclusion, h.conclusion) &&
           same_types(lam_erased_[id], hl) && same_types(mu_erased_[id], hm);
  }

  int alloc(const Goal& g, std::set<int> downset) {
    int id = static_cast<int>(goals_.size());
    if (id > (1 << 20)) throw std::logic_error("build: variable count exploded");
    downset.insert(id);
    goals_.push_back(g);
    downsets_.push_back(std::move(downset));
    lam_erased_.push_back(erased_types(g.lambda_hyps));
    mu_erased_.push_back(erased_types(g.mu_hyps));
    eqs_.emplace_back();
    worklist_.push_back(id);
    return id;
  }

  // "let n be a variable for h": reuse an ancestor of the current variable
  // (the current goal included) when equivalent, else a variable already
  // requested during this step, else allocate.
  Polynomial var_for(const Goal& h) {
    auto hl = erased_types(h.lambda_hyps);
    auto hm = erased_types(h.mu_hyps);
    for (int id : downsets_[current_])
      if (equiv(id, h, hl, hm)) {
        note_reuse(id, h);
        return Polynomial::variable(id);
      }
    for (auto& [g, id] : step_memo_)
      if (equiv(id, h, hl, hm)) {
        note_reuse(id, h);
        return Polynomial::variable(id);
      }
    int id = alloc(h, downsets_[current_]);
    step_memo_.push_back({h, id});
    return Polynomial::variable(id);
  }

  Polynomial intro_poly(const Goal& g) {
    const Formula& b = g.conclusion;
    switch (b->kind) {
      case FKind::Atom:
      case FKind::Bottom:
        return Polynomial::zero();
      case FKind::Implies: {
        Goal h = g;
        h.lambda_hyps.push_back({fresh_name(g, "x"), b->left});
        h.conclusion = b->right;
        return var_for(h);
      }
      case FKind::And: {
        Goal h1 = g, h2 = g;
        h1.conclusion = b->left;
        h2.conclusion = b->right;
        return var_for(h1) * var_for(h2);
      }
      case FKind::Or: {
        Goal h1 = g, h2 = g;
        h1.conclusion = b->left;
        h2.conclusion = b->right;
        return var_for(h1) + var_for(h2);
      }
    }
    return Polynomial::zero();
  }

  Polynomial contra_poly(const Goal& g) {
    const Formula& b = g.conclusion;
    if (mode_.eta_long && (b->kind == FKind::Implies || b->kind == FKind::And))
      return Polynomial::zero();
    switch (mode_.logic) {
      case Logic::Minimal: return Polynomial::zero();
      case Logic::Intuitionistic: {
        if (b->kind == FKind::Bottom) return Polynomial::zero();
        Goal h = g;
        h.conclusion = bottom();
        return var_for(h);
      }
      case Logic::Classical: {
        if (b->kind == FKind::Bottom || is_negation(b)) return Polynomial::zero();
        for (auto& m : g.mu_hyps)
          if (formula_eq(m.type, b)) return Polynomial::zero();
        Goal h = g;
        h.mu_hyps.push_back({fresh_name(g, "a"), b});
        h.conclusion = bottom();
        return var_for(h);
      }
    }
    return Polynomial::zero();
  }

  Polynomial elim_poly(const Goal& g) {
    const Formula& b = g.conclusion;
    if (mode_.eta_long && (b->kind == FKind::Implies || b->kind == FKind::And))
      return Polynomial::zero();
    Polynomial r;
    for (std::size_t idx = 0; idx < g.lambda_hyps.size(); idx++) {
      const Formula& a = g.lambda_hyps[idx].type;
      for (const ElimList& l : elim(a, b)) {
        Polynomial prod = Polynomial::constant(ExtNat(1));
        for (const Formula& c : l.prefix()) {
          Goal h = g;
          h.conclusion = c;
          prod = prod * var_for(h);
        }
        if (!l.star) {
          // case split: the eliminated occurrence is consumed
          Goal base = g;
          base.lambda_hyps.erase(base.lambda_hyps.begin() + static_cast<long>(idx));
          Goal h1 = base, h2 = base;
          h1.lambda_hyps.push_back({fresh_name(base, "x"), l.d1});
          h2.lambda_hyps.push_back({fresh_name(base, "x"), l.d2});
          prod = prod * var_for(h1) * var_for(h2);
        }
        r = r + prod;
      }
    }
    if (b->kind == FKind::Bottom) {
      for (auto& m : g.mu_hyps) {
        Goal h = g;
        h.conclusion = m.type;
        r = r + var_for(h);
      }
    }
    return r;
  }

  void process(int i) {
    current_ = i;
    step_memo_.clear();
    const Goal g = goals_[i];
    eqs_[i] = intro_poly(g) + contra_poly(g) + elim_poly(g);
  }
};

}  // namespace

bool equivalent(const Goal& g, const Goal& h) {
  return formula_eq(g.conclusion, h.conclusion) &&
         same_types(erased_types(g.lambda_hyps), erased_types(h.lambda_hyps)) &&
         same_types(erased_types(g.mu_hyps), erased_types(h.mu_hyps));
}

BuildResult build(const Goal& g, Mode mode) { return Builder(g, mode).run(); }

ExtNat count_goal(const Goal& g, Mode mode) {
  BuildResult r = build(g, mode);
  return solve_min(r.system)[r.root];
}

ExtNat count(const Formula& f, Mode mode) { return count_goal(goal_of(f), mode); }

bool decide(const Formula& f, Mode mode) {
  BuildResult r = build(goal_of(f), mode);
  return solve_bool(r.system)[r.root];
}

}  // namespace pc
