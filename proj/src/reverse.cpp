#include "proofcount/reverse.hpp"

#include <algorithm>
#include <stdexcept>

namespace pc {

ReverseOutput formulae_of(const PSE& s) {
  const int n = static_cast<int>(s.size());
  ReverseOutput out;
  for (int i = 0; i < n; i++) out.ground_atoms.push_back(atom("O" + std::to_string(i + 1)));

  // Every monomial of every equation becomes a premise; a monomial of f_p
  // with coefficient c yields c copies of O_1^{a_1} -> ... -> O_n^{a_n} -> O_p.
  std::vector<Formula> premises;
  for (int p = 0; p < n; p++) {
    for (const auto& [m, c] : s.rhs[p].terms) {
      if (c.is_omega())
        throw std::invalid_argument("formulae_of: omega coefficient in equation for " +
                                    (p < static_cast<int>(s.names.size()) ? s.names[p]
                                                                          : "x" + std::to_string(p)));
      Formula t = out.ground_atoms[p];
      for (auto it = m.powers.rbegin(); it != m.powers.rend(); ++it) {
        auto [v, e] = *it;
        if (v < 0 || v >= n)
          throw std::invalid_argument("formulae_of: equation mentions an unknown variable");
        for (int j = 0; j < e; j++) t = implies(out.ground_atoms[v], t);
      }
      for (std::uint64_t j = 0; j < c.value(); j++) premises.push_back(t);
    }
  }
  std::sort(premises.begin(), premises.end(),
            [](const Formula& a, const Formula& b) { return formula_lt(b, a); });

  for (int p = 0; p < n; p++) {
    Formula a = out.ground_atoms[p];
    for (auto it = premises.rbegin(); it != premises.rend(); ++it) a = implies(*it, a);
    out.formulas.push_back(a);
  }
  return out;
}

}  // namespace pc
