#pragma once

#include <vector>

#include "proofcount/formula.hpp"
#include "proofcount/poly.hpp"
#include "proofcount/term.hpp"

namespace pc {

enum class Logic { Classical, Intuitionistic, Minimal };

struct Mode {
  Logic logic = Logic::Classical;
  bool eta_long = false;
};

// Goal equivalence: equal conclusions and equal multiplicity-erased sets of
// declared formulae, per namespace (lambda and mu kept apart).
bool equivalent(const Goal& g, const Goal& h);

struct BuildResult {
  PSE system;
  VarId root = 0;
  std::vector<Goal> goals;  // goals[i] belongs to variable i
  // True when some reuse identified goals whose contexts differ as
  // multisets. Total counts are preserved; the size-stratified recurrence
  // d(k+1) <= P(d(k)) is only guaranteed for contraction-free systems.
  bool contracted = false;
};

// The equation generator: one variable per goal, with ancestor-based reuse,
// equation = intro + contradiction + elimination contributions.
BuildResult build(const Goal& g, Mode mode);

ExtNat count(const Formula& f, Mode mode);
ExtNat count_goal(const Goal& g, Mode mode);
bool decide(const Formula& f, Mode mode);

}  // namespace pc
