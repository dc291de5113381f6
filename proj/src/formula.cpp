#include "proofcount/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace pc {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Formula make(FKind k, std::string name, Formula l, Formula r) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->name = std::move(name);
  n->left = std::move(l);
  n->right = std::move(r);
  std::size_t h = static_cast<std::size_t>(k) * 1315423911ULL;
  if (n->kind == FKind::Atom) h = mix(h, std::hash<std::string>{}(n->name));
  if (n->left) h = mix(h, n->left->hash);
  if (n->right) h = mix(h, n->right->hash);
  n->hash = h;
  return n;
}

}  // namespace

Formula atom(std::string name) { return make(FKind::Atom, std::move(name), nullptr, nullptr); }
Formula bottom() {
  static const Formula b = make(FKind::Bottom, "", nullptr, nullptr);
  return b;
}
Formula implies(Formula l, Formula r) { return make(FKind::Implies, "", std::move(l), std::move(r)); }
Formula conj(Formula l, Formula r) { return make(FKind::And, "", std::move(l), std::move(r)); }
Formula disj(Formula l, Formula r) { return make(FKind::Or, "", std::move(l), std::move(r)); }
Formula neg(Formula f) { return implies(std::move(f), bottom()); }

bool formula_eq(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Atom: return a->name == b->name;
    case FKind::Bottom: return true;
    default: return formula_eq(a->left, b->left) && formula_eq(a->right, b->right);
  }
}

int formula_cmp(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case FKind::Atom: return a->name.compare(b->name) < 0 ? -1 : (a->name == b->name ? 0 : 1);
    case FKind::Bottom: return 0;
    default: {
      int c = formula_cmp(a->left, b->left);
      if (c != 0) return c;
      return formula_cmp(a->right, b->right);
    }
  }
}

bool is_negation(const Formula& f) {
  return f->kind == FKind::Implies && f->right->kind == FKind::Bottom;
}

// ---------------------------------------------------------------------------
// Concrete syntax.
//
//   formula := disj ( "->" formula )?        right associative
//   disj    := conj ( "\/" conj )*           left associative
//   conj    := neg ( "/\" neg )*             left associative
//   neg     := "~" neg | atom | "_|_" | "bot" | "(" formula ")"

namespace {

class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

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

  Formula formula() {
    Formula l = disjunct();
    if (eat("->")) return implies(std::move(l), formula());
    return l;
  }

  Formula disjunct() {
    Formula l = conjunct();
    while (eat("\\/")) l = disj(std::move(l), conjunct());
    return l;
  }

  Formula conjunct() {
    Formula l = negation();
    while (eat("/\\")) l = conj(std::move(l), negation());
    return l;
  }

  Formula negation() {
    skip_ws();
    if (eat("~")) return neg(negation());
    if (eat("_|_")) return bottom();
    if (eat("(")) {
      Formula f = formula();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        pos_++;
      std::string id(text_.substr(start, pos_ - start));
      if (id == "bot") return bottom();
      return atom(std::move(id));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

// Precedence levels for rendering: -> is 1, \/ is 2, /\ is 3, ~/atoms 4.
int level(const Formula& f) {
  switch (f->kind) {
    case FKind::Implies: return is_negation(f) ? 4 : 1;
    case FKind::Or: return 2;
    case FKind::And: return 3;
    default: return 4;
  }
}

void render_rec(const Formula& f, int min_level, std::string& out) {
  bool paren = level(f) < min_level;
  if (paren) out += '(';
  switch (f->kind) {
    case FKind::Atom: out += f->name; break;
    case FKind::Bottom: out += "_|_"; break;
    case FKind::Implies:
      if (is_negation(f)) {
        out += '~';
        render_rec(f->left, 4, out);  // atoms and negations stay bare
      } else {
        render_rec(f->left, 2, out);
        out += " -> ";
        render_rec(f->right, 1, out);
      }
      break;
    case FKind::Or:
      render_rec(f->left, 2, out);
      out += " \\/ ";
      render_rec(f->right, 3, out);
      break;
    case FKind::And:
      render_rec(f->left, 3, out);
      out += " /\\ ";
      render_rec(f->right, 4, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string render(const Formula& f) {
  std::string out;
  render_rec(f, 1, out);
  return out;
}

std::vector<Formula> subformulae(const Formula& f) {
  std::vector<Formula> out;
  FormulaSet seen;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    if (g->left) go(g->left);
    if (g->right) go(g->right);
    if (seen.insert(g).second) out.push_back(g);
  };
  go(f);
  return out;
}

int rank(const Formula& f) {
  switch (f->kind) {
    case FKind::Atom: return 0;
    case FKind::Implies: return std::max(rank(f->left) + 1, rank(f->right));
    default: throw std::invalid_argument("rank: formula is not purely implicational");
  }
}

std::vector<Formula> ElimList::prefix() const {
  std::vector<Formula> out;
  for (const auto& s : steps)
    if (s.kind == ElimStep::Kind::Subgoal) out.push_back(s.goal);
  return out;
}

bool ElimList::has_proj() const {
  for (const auto& s : steps)
    if (s.kind == ElimStep::Kind::Proj) return true;
  return false;
}

std::vector<ElimList> elim(const Formula& a, const Formula& b) {
  if (formula_eq(a, b)) return {ElimList{}};  // [*]
  switch (a->kind) {
    case FKind::Atom:
    case FKind::Bottom:
      return {};
    case FKind::Implies: {
      std::vector<ElimList> out = elim(a->right, b);
      for (auto& l : out)
        l.steps.insert(l.steps.begin(), ElimStep{ElimStep::Kind::Subgoal, a->left, 0});
      return out;
    }
    case FKind::And: {
      std::vector<ElimList> out = elim(a->left, b);
      for (auto& l : out) l.steps.insert(l.steps.begin(), ElimStep{ElimStep::Kind::Proj, nullptr, 1});
      std::vector<ElimList> rhs = elim(a->right, b);
      for (auto& l : rhs) {
        l.steps.insert(l.steps.begin(), ElimStep{ElimStep::Kind::Proj, nullptr, 2});
        out.push_back(std::move(l));
      }
      return out;
    }
    case FKind::Or: {
      ElimList l;
      l.star = false;
      l.d1 = a->left;
      l.d2 = a->right;
      return {l};
    }
  }
  return {};
}

}  // namespace pc
