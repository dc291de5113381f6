#pragma once

#include <vector>

#include "proofcount/formula.hpp"
#include "proofcount/poly.hpp"

namespace pc {

// The reverse construction: formulas over fresh ground atoms O1..On whose
// eta-long normal proof counts (minimal logic) realize the minimal solution
// of the system. Rejects omega coefficients (std::invalid_argument).
struct ReverseOutput {
  std::vector<Formula> ground_atoms;  // O1..On
  std::vector<Formula> formulas;      // A1..An, one per variable
};

ReverseOutput formulae_of(const PSE& s);

}  // namespace pc
