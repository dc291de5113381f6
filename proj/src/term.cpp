#include "proofcount/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace pc {

namespace {
Term make(TKind k, std::string name, Term a, Term b, int index, ElimArgPtr earg) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  n->index = index;
  n->earg = std::move(earg);
  return n;
}
}  // namespace

Term tvar(std::string name) { return make(TKind::Var, std::move(name), nullptr, nullptr, 0, nullptr); }
Term tlam(std::string name, Term body) {
  return make(TKind::Lam, std::move(name), std::move(body), nullptr, 0, nullptr);
}
Term tapp(Term head, ElimArgPtr arg) {
  return make(TKind::App, "", std::move(head), nullptr, 0, std::move(arg));
}
Term tpair(Term fst, Term snd) {
  return make(TKind::Pair, "", std::move(fst), std::move(snd), 0, nullptr);
}
Term tinj(int index, Term body) {
  return make(TKind::Inj, "", std::move(body), nullptr, index, nullptr);
}
Term tmu(std::string name, Term body) {
  return make(TKind::Mu, std::move(name), std::move(body), nullptr, 0, nullptr);
}
Term tnamed(std::string name, Term body) {
  return make(TKind::Named, std::move(name), std::move(body), nullptr, 0, nullptr);
}

ElimArgPtr earg_term(Term t) {
  auto e = std::make_shared<ElimArg>();
  e->kind = EKind::TermArg;
  e->arg = std::move(t);
  return e;
}
ElimArgPtr earg_proj(int index) {
  auto e = std::make_shared<ElimArg>();
  e->kind = EKind::Proj;
  e->index = index;
  return e;
}
ElimArgPtr earg_case(std::string v1, Term b1, std::string v2, Term b2) {
  auto e = std::make_shared<ElimArg>();
  e->kind = EKind::Case;
  e->v1 = std::move(v1);
  e->v2 = std::move(v2);
  e->branch1 = std::move(b1);
  e->branch2 = std::move(b2);
  return e;
}

const Formula* Goal::lambda_type(const std::string& n) const {
  for (const auto& h : lambda_hyps)
    if (h.name == n) return &h.type;
  return nullptr;
}
const Formula* Goal::mu_type(const std::string& n) const {
  for (const auto& h : mu_hyps)
    if (h.name == n) return &h.type;
  return nullptr;
}

Goal goal_of(Formula conclusion) { return Goal{std::move(conclusion), {}, {}}; }

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_rec(const Term& t, std::string& out);

// Arguments and w-bodies print in a self-delimiting form.
void print_atomic(const Term& t, std::string& out) {
  switch (t->kind) {
    case TKind::Var:
    case TKind::App:
    case TKind::Named:
    case TKind::Pair:
    case TKind::Lam:
    case TKind::Mu:
      print_rec(t, out);
      break;
    default:
      out += '(';
      print_rec(t, out);
      out += ')';
  }
}

void print_rec(const Term& t, std::string& out) {
  switch (t->kind) {
    case TKind::Var: out += t->name; break;
    case TKind::Lam:
      out += '\\';
      out += t->name;
      out += ". ";
      print_rec(t->a, out);
      break;
    case TKind::Mu:
      out += "mu ";
      out += t->name;
      out += ". ";
      print_rec(t->a, out);
      break;
    case TKind::Named:
      out += '(';
      out += t->name;
      out += ' ';
      print_atomic(t->a, out);
      out += ')';
      break;
    case TKind::Pair:
      out += '<';
      print_rec(t->a, out);
      out += ", ";
      print_rec(t->b, out);
      out += '>';
      break;
    case TKind::Inj:
      out += t->index == 1 ? "w1 " : "w2 ";
      print_atomic(t->a, out);
      break;
    case TKind::App: {
      // flatten the spine
      std::vector<const ElimArg*> args;
      const TermNode* h = t.get();
      while (h->kind == TKind::App) {
        args.push_back(h->earg.get());
        h = h->a.get();
      }
      std::reverse(args.begin(), args.end());
      out += '(';
      if (h->kind == TKind::Var) {
        out += h->name;
      } else {
        Term head = t;
        while (head->kind == TKind::App) head = head->a;
        print_atomic(head, out);
      }
      for (const ElimArg* e : args) {
        out += ' ';
        switch (e->kind) {
          case EKind::TermArg: print_atomic(e->arg, out); break;
          case EKind::Proj: out += e->index == 1 ? "pi1" : "pi2"; break;
          case EKind::Case:
            out += '[';
            out += e->v1;
            out += '.';
            print_rec(e->branch1, out);
            out += ", ";
            out += e->v2;
            out += '.';
            print_rec(e->branch2, out);
            out += ']';
            break;
        }
      }
      out += ')';
      break;
    }
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
public:
  TermParser(std::string_view text, const Goal& g) : text_(text), goal_(g) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

private:
  std::string_view text_;
  const Goal& goal_;
  std::size_t pos_ = 0;
  // identifier -> true if a mu name, innermost binding last
  std::vector<std::pair<std::string, bool>> scope_;

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) pos_++;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek_ident() {
    skip_ws();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string ident() {
    skip_ws();
    if (!peek_ident()) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      pos_++;
    return std::string(text_.substr(start, pos_ - start));
  }

  // true if n is a mu name here, false if a lambda variable
  bool classify(const std::string& n) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == n) return it->second;
    if (goal_.lambda_type(n)) return false;
    if (goal_.mu_type(n)) return true;
    fail("unbound identifier '" + n + "'");
  }

  Term term() {
    if (eat("\\")) {
      std::string x = ident();
      if (!eat(".")) fail("expected '.'");
      scope_.emplace_back(x, false);
      Term body = term();
      scope_.pop_back();
      return tlam(std::move(x), std::move(body));
    }
    skip_ws();
    if (text_.substr(pos_, 2) == "mu" &&
        (pos_ + 2 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 2])))) {
      pos_ += 2;
      std::string a = ident();
      if (!eat(".")) fail("expected '.'");
      scope_.emplace_back(a, true);
      Term body = term();
      scope_.pop_back();
      return tmu(std::move(a), std::move(body));
    }
    if (eat("w1")) return tinj(1, term());
    if (eat("w2")) return tinj(2, term());
    return primary();
  }

  Term primary() {
    skip_ws();
    if (eat("<")) {
      Term a = term();
      if (!eat(",")) fail("expected ','");
      Term b = term();
      if (!eat(">")) fail("expected '>'");
      return tpair(std::move(a), std::move(b));
    }
    if (eat("(")) {
      Term t = application();
      if (!eat(")")) fail("expected ')'");
      return t;
    }
    if (peek_ident()) {
      std::string n = ident();
      if (classify(n)) fail("mu name '" + n + "' used as a term");
      return tvar(std::move(n));
    }
    fail("expected a term");
  }

  Term application() {
    skip_ws();
    // (a t) with a mu name becomes a naming, not an application
    if (peek_ident()) {
      std::size_t save = pos_;
      std::string n = ident();
      bool named = false;
      bool found = false;
      for (auto it = scope_.rbegin(); it != scope_.rend() && !found; ++it)
        if (it->first == n) {
          found = true;
          named = it->second;
        }
      if (!found && goal_.lambda_type(n)) found = true;
      if (!found && goal_.mu_type(n)) {
        found = true;
        named = true;
      }
      if (found && named) {
        Term arg = term();
        return tnamed(std::move(n), std::move(arg));
      }
      pos_ = save;
    }
    Term head = term();
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      head = tapp(std::move(head), elim_arg());
    }
    return head;
  }

  ElimArgPtr elim_arg() {
    if (eat("pi1")) return earg_proj(1);
    if (eat("pi2")) return earg_proj(2);
    if (eat("[")) {
      std::string x1 = ident();
      if (!eat(".")) fail("expected '.'");
      scope_.emplace_back(x1, false);
      Term b1 = term();
      scope_.pop_back();
      if (!eat(",")) fail("expected ','");
      std::string x2 = ident();
      if (!eat(".")) fail("expected '.'");
      scope_.emplace_back(x2, false);
      Term b2 = term();
      scope_.pop_back();
      if (!eat("]")) fail("expected ']'");
      return earg_case(std::move(x1), std::move(b1), std::move(x2), std::move(b2));
    }
    return earg_term(term());
  }
};

}  // namespace

Term parse_term(std::string_view text, const Goal& g) { return TermParser(text, g).parse(); }

// ---------------------------------------------------------------------------
// Variables and alpha conversion

namespace {

void free_vars_rec(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case TKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      break;
    case TKind::Named: {
      if (!bound.count(t->name)) out.insert(t->name);
      free_vars_rec(t->a, bound, out);
      break;
    }
    case TKind::Lam:
    case TKind::Mu: {
      bool fresh = bound.insert(t->name).second;
      free_vars_rec(t->a, bound, out);
      if (fresh) bound.erase(t->name);
      break;
    }
    case TKind::Pair:
      free_vars_rec(t->a, bound, out);
      free_vars_rec(t->b, bound, out);
      break;
    case TKind::Inj:
      free_vars_rec(t->a, bound, out);
      break;
    case TKind::App: {
      free_vars_rec(t->a, bound, out);
      const ElimArg& e = *t->earg;
      if (e.kind == EKind::TermArg) {
        free_vars_rec(e.arg, bound, out);
      } else if (e.kind == EKind::Case) {
        bool f1 = bound.insert(e.v1).second;
        free_vars_rec(e.branch1, bound, out);
        if (f1) bound.erase(e.v1);
        bool f2 = bound.insert(e.v2).second;
        free_vars_rec(e.branch2, bound, out);
        if (f2) bound.erase(e.v2);
      }
      break;
    }
  }
}

using RenameScope = std::vector<std::pair<std::string, std::string>>;

std::string lookup(const RenameScope& sc, const std::string& n, bool& found) {
  for (auto it = sc.rbegin(); it != sc.rend(); ++it)
    if (it->first == n) {
      found = true;
      return it->second;
    }
  found = false;
  return n;
}

// Generic renamer: `binder` produces the new name for each binder occurrence;
// free names map through `free_map` (identity if absent).
Term rename_rec(const Term& t, RenameScope& sc,
                const std::function<std::string(const std::string&)>& binder,
                const std::vector<std::pair<std::string, std::string>>* free_map) {
  auto map_name = [&](const std::string& n) -> std::string {
    bool found = false;
    std::string r = lookup(sc, n, found);
    if (found) return r;
    if (free_map)
      for (const auto& [from, to] : *free_map)
        if (from == n) return to;
    return n;
  };
  switch (t->kind) {
    case TKind::Var: return tvar(map_name(t->name));
    case TKind::Named: return tnamed(map_name(t->name), rename_rec(t->a, sc, binder, free_map));
    case TKind::Lam:
    case TKind::Mu: {
      std::string fresh = binder(t->name);
      sc.emplace_back(t->name, fresh);
      Term body = rename_rec(t->a, sc, binder, free_map);
      sc.pop_back();
      return t->kind == TKind::Lam ? tlam(std::move(fresh), std::move(body))
                                   : tmu(std::move(fresh), std::move(body));
    }
    case TKind::Pair:
      return tpair(rename_rec(t->a, sc, binder, free_map), rename_rec(t->b, sc, binder, free_map));
    case TKind::Inj: return tinj(t->index, rename_rec(t->a, sc, binder, free_map));
    case TKind::App: {
      Term head = rename_rec(t->a, sc, binder, free_map);
      const ElimArg& e = *t->earg;
      switch (e.kind) {
        case EKind::TermArg: return tapp(std::move(head), earg_term(rename_rec(e.arg, sc, binder, free_map)));
        case EKind::Proj: return tapp(std::move(head), earg_proj(e.index));
        case EKind::Case: {
          std::string f1 = binder(e.v1);
          sc.emplace_back(e.v1, f1);
          Term b1 = rename_rec(e.branch1, sc, binder, free_map);
          sc.pop_back();
          std::string f2 = binder(e.v2);
          sc.emplace_back(e.v2, f2);
          Term b2 = rename_rec(e.branch2, sc, binder, free_map);
          sc.pop_back();
          return tapp(std::move(head), earg_case(std::move(f1), std::move(b1), std::move(f2), std::move(b2)));
        }
      }
      break;
    }
  }
  return t;
}

}  // namespace

std::vector<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  free_vars_rec(t, bound, out);
  return {out.begin(), out.end()};
}

Term rename_free(const Term& t, const std::vector<std::pair<std::string, std::string>>& map) {
  RenameScope sc;
  return rename_rec(t, sc, [](const std::string& n) { return n; }, &map);
}

Term alpha_canonical(const Term& t) {
  RenameScope sc;
  int counter = 0;
  return rename_rec(
      t, sc, [&counter](const std::string&) { return "_b" + std::to_string(counter++); }, nullptr);
}

bool term_eq(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->name != b->name || a->index != b->index) return false;
  auto sub_eq = [](const Term& x, const Term& y) {
    return (!x && !y) || (x && y && term_eq(x, y));
  };
  if (!sub_eq(a->a, b->a) || !sub_eq(a->b, b->b)) return false;
  if (a->kind == TKind::App) {
    const ElimArg &ea = *a->earg, &eb = *b->earg;
    if (ea.kind != eb.kind || ea.index != eb.index) return false;
    if (ea.kind == EKind::TermArg && !term_eq(ea.arg, eb.arg)) return false;
    if (ea.kind == EKind::Case) {
      if (ea.v1 != eb.v1 || ea.v2 != eb.v2) return false;
      if (!term_eq(ea.branch1, eb.branch1) || !term_eq(ea.branch2, eb.branch2)) return false;
    }
  }
  return true;
}

bool alpha_eq(const Term& a, const Term& b) {
  return term_eq(alpha_canonical(a), alpha_canonical(b));
}

}  // namespace pc
