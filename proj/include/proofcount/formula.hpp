#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace pc {

// Propositional formulae over atoms, bottom, ->, /\ and \/.
// Negation is sugar: ~F is stored as F -> bottom.
enum class FKind { Atom, Bottom, Implies, And, Or };

class FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

class FormulaNode {
public:
  FKind kind;
  std::string name;      // Atom only
  Formula left, right;   // binary connectives only
  std::size_t hash;      // structural, cached at construction
};

Formula atom(std::string name);
Formula bottom();
Formula implies(Formula l, Formula r);
Formula conj(Formula l, Formula r);
Formula disj(Formula l, Formula r);
Formula neg(Formula f);  // implies(f, bottom())

bool formula_eq(const Formula& a, const Formula& b);
// Total structural order (kind, then atom name, then children). Used wherever
// a deterministic formula ordering is needed.
int formula_cmp(const Formula& a, const Formula& b);
inline bool formula_lt(const Formula& a, const Formula& b) { return formula_cmp(a, b) < 0; }

bool is_negation(const Formula& f);  // Implies(_, Bottom)
// Atomic in the sense of the proof rules: an atom or bottom.
inline bool is_atomic(const Formula& f) {
  return f->kind == FKind::Atom || f->kind == FKind::Bottom;
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f->hash; }
};
struct FormulaEq {
  bool operator()(const Formula& a, const Formula& b) const { return formula_eq(a, b); }
};
using FormulaSet = std::unordered_set<Formula, FormulaHash, FormulaEq>;

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

Formula parse_formula(std::string_view text);
std::string render(const Formula& f);

// All structural subformulae of f, including f itself, deduplicated,
// in first-visit (postorder) order.
std::vector<Formula> subformulae(const Formula& f);

// Rank of a purely implicational formula. Throws std::invalid_argument on
// any other connective (including bottom).
int rank(const Formula& f);

// One list of Elim(A,B): a spine skeleton. `steps` interleaves subgoal
// formulae (arguments still to be proved) with projection choices; the tail
// is either * or a pending disjunction D1 \/ D2.
struct ElimStep {
  enum class Kind { Subgoal, Proj } kind;
  Formula goal;    // Subgoal
  int proj_index;  // Proj: 1 or 2
};

struct ElimList {
  std::vector<ElimStep> steps;
  bool star = true;    // true: tail is *, false: tail is d1 \/ d2
  Formula d1, d2;

  // The subgoal formulas A_1..A_p in order (projection steps skipped).
  std::vector<Formula> prefix() const;
  bool has_proj() const;
};

// Elim(A,B). Returns a sequence preserving duplicates; order is
// deterministic (A=B clause first, left conjunct before right conjunct).
std::vector<ElimList> elim(const Formula& a, const Formula& b);

}  // namespace pc
