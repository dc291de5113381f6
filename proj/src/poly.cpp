#include "proofcount/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pc {

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : powers) d += e;
  return d;
}

bool monomial_lt(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // lex: lower variable ids are more significant
  std::size_t i = 0, j = 0;
  while (i < a.powers.size() && j < b.powers.size()) {
    if (a.powers[i].first != b.powers[j].first)
      // the side mentioning the smaller variable is lex-greater
      return a.powers[i].first > b.powers[j].first;
    if (a.powers[i].second != b.powers[j].second)
      return a.powers[i].second < b.powers[j].second;
    i++, j++;
  }
  return i == a.powers.size() && j < b.powers.size();
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::size_t i = 0, j = 0;
  while (i < a.powers.size() || j < b.powers.size()) {
    if (j >= b.powers.size() || (i < a.powers.size() && a.powers[i].first < b.powers[j].first))
      m.powers.push_back(a.powers[i++]);
    else if (i >= a.powers.size() || b.powers[j].first < a.powers[i].first)
      m.powers.push_back(b.powers[j++]);
    else {
      m.powers.emplace_back(a.powers[i].first, a.powers[i].second + b.powers[j].second);
      i++, j++;
    }
  }
  return m;
}

Polynomial normalize(std::vector<std::pair<Monomial, ExtNat>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return monomial_lt(b.first, a.first); });
  Polynomial p;
  for (auto& t : terms) {
    if (t.second.is_zero()) continue;
    if (!p.terms.empty() && p.terms.back().first == t.first)
      p.terms.back().second += t.second;
    else
      p.terms.push_back(std::move(t));
  }
  std::erase_if(p.terms, [](const auto& t) { return t.second.is_zero(); });
  return p;
}

}  // namespace

Polynomial Polynomial::constant(ExtNat c) {
  Polynomial p;
  if (!c.is_zero()) p.terms.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(VarId x) {
  Polynomial p;
  p.terms.push_back({Monomial{{{x, 1}}}, ExtNat(1)});
  return p;
}

ExtNat Polynomial::constant_term() const {
  for (auto& [m, c] : terms)
    if (m.powers.empty()) return c;
  return ExtNat(0);
}

int Polynomial::degree() const {
  int d = 0;
  for (auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

std::vector<VarId> Polynomial::vars() const {
  std::vector<VarId> out;
  for (auto& [m, c] : terms)
    for (auto& [v, e] : m.powers) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  auto terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return normalize(std::move(terms));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<std::pair<Monomial, ExtNat>> terms;
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) terms.push_back({mono_mul(ma, mb), ca * cb});
  return normalize(std::move(terms));
}

Polynomial scale(const Polynomial& a, ExtNat c) {
  auto terms = a.terms;
  for (auto& t : terms) t.second *= c;
  return normalize(std::move(terms));
}

ExtNat eval(const Polynomial& p, const std::vector<ExtNat>& env) {
  ExtNat total(0);
  for (auto& [m, c] : p.terms) {
    ExtNat t = c;
    for (auto& [v, e] : m.powers) {
      if (v < 0 || static_cast<std::size_t>(v) >= env.size())
        throw std::out_of_range("eval: variable not in environment");
      for (int i = 0; i < e; i++) t *= env[v];
    }
    total += t;
  }
  return total;
}

Polynomial subst(const Polynomial& p, VarId x, const Polynomial& g) {
  Polynomial out;
  for (auto& [m, c] : p.terms) {
    Monomial rest;
    int ex = 0;
    for (auto& [v, e] : m.powers) {
      if (v == x)
        ex = e;
      else
        rest.powers.push_back({v, e});
    }
    Polynomial t;
    t.terms.push_back({rest, c});
    for (int i = 0; i < ex; i++) t = t * g;
    out = out + t;
  }
  return out;
}

std::string poly_str(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.terms.size(); i++) {
    const auto& [m, c] = p.terms[i];
    if (i) out += " + ";
    bool coeff_shown = !(c == ExtNat(1)) || m.powers.empty();
    if (coeff_shown) out += c.str();
    for (std::size_t k = 0; k < m.powers.size(); k++) {
      auto [v, e] = m.powers[k];
      if (coeff_shown || k) out += "*";
      out += (v >= 0 && static_cast<std::size_t>(v) < names.size()) ? names[v]
                                                                    : "x" + std::to_string(v);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

Polynomial min_univariate(const Polynomial& f, VarId x) {
  Polynomial f0, h;
  for (auto& [m, c] : f.terms) {
    Monomial rest;
    bool has_x = false;
    for (auto& [v, e] : m.powers) {
      if (v == x)
        has_x = true;
      else
        rest.powers.push_back({v, e});
    }
    Polynomial t;
    t.terms.push_back({rest, c});
    if (has_x)
      h = h + t;
    else
      f0 = f0 + t;
  }
  return f0 + scale(f0 * h, ExtNat::omega());
}

std::vector<ExtNat> solve_min(const PSE& s, const std::vector<VarId>& order) {
  const int n = static_cast<int>(s.size());
  std::vector<VarId> ord = order;
  if (ord.empty())
    for (int i = n - 1; i >= 0; i--) ord.push_back(i);
  if (static_cast<int>(ord.size()) != n)
    throw std::invalid_argument("solve_min: order must cover all variables");

  // Zero components first. Substituting the known value of a component
  // preserves the least fixpoint of the rest.
  std::vector<bool> pos = solve_bool(s);

  // Omega components: a positive variable is omega exactly when, following
  // monomials whose variables are all positive, it reaches an omega
  // coefficient or a dependency cycle (a cycle can be pumped: each extra
  // unfolding is a distinct proof/derivation).
  std::vector<std::vector<int>> dep(static_cast<std::size_t>(n));
  std::vector<char> is_omega(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; i++) {
    if (!pos[static_cast<std::size_t>(i)]) continue;
    for (auto& [m, c] : s.rhs[static_cast<std::size_t>(i)].terms) {
      bool live = true;
      for (auto& [v, e] : m.powers)
        if (!pos[static_cast<std::size_t>(v)]) {
          live = false;
          break;
        }
      if (!live) continue;
      if (c.is_omega()) is_omega[static_cast<std::size_t>(i)] = 1;
      for (auto& [v, e] : m.powers) dep[static_cast<std::size_t>(i)].push_back(v);
    }
  }
  // mark everything that reaches a cycle of dep (iterative: a variable is
  // omega if it reaches an omega variable; a cycle member reaches itself
  // through the cycle, detected by transitive closure with repetition)
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; i++)
    for (int j : dep[static_cast<std::size_t>(i)]) reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  for (int k = 0; k < n; k++)
    for (int i = 0; i < n; i++)
      if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
        for (int j = 0; j < n; j++)
          if (reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
            reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  for (int i = 0; i < n; i++) {
    if (!pos[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < n; j++) {
      if (!reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      if (is_omega[static_cast<std::size_t>(j)] || reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)])
        is_omega[static_cast<std::size_t>(i)] = 1;
    }
  }

  // Known components become constants; the rest (finite, acyclic) goes
  // through univariate elimination and numeric back substitution.
  std::vector<Polynomial> rhs = s.rhs;
  std::vector<Polynomial> g(static_cast<std::size_t>(n));
  std::vector<char> fixed(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; i++) {
    if (pos[static_cast<std::size_t>(i)] && !is_omega[static_cast<std::size_t>(i)]) continue;
    ExtNat v = !pos[static_cast<std::size_t>(i)] ? ExtNat(0) : ExtNat::omega();
    g[static_cast<std::size_t>(i)] = Polynomial::constant(v);
    fixed[static_cast<std::size_t>(i)] = 1;
  }
  for (int i = 0; i < n; i++) {
    if (fixed[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < n; j++)
      if (fixed[static_cast<std::size_t>(j)])
        rhs[static_cast<std::size_t>(i)] = subst(rhs[static_cast<std::size_t>(i)], j, g[static_cast<std::size_t>(j)]);
  }
  std::vector<VarId> elim_order;
  for (VarId x : ord)
    if (!fixed[static_cast<std::size_t>(x)]) elim_order.push_back(x);
  for (std::size_t j = 0; j < elim_order.size(); j++) {
    VarId x = elim_order[j];
    g[static_cast<std::size_t>(x)] = min_univariate(rhs[static_cast<std::size_t>(x)], x);
    for (std::size_t k = j + 1; k < elim_order.size(); k++)
      rhs[static_cast<std::size_t>(elim_order[k])] =
          subst(rhs[static_cast<std::size_t>(elim_order[k])], x, g[static_cast<std::size_t>(x)]);
  }
  std::vector<ExtNat> env(static_cast<std::size_t>(n), ExtNat(0));
  for (int i = 0; i < n; i++)
    if (fixed[static_cast<std::size_t>(i)]) env[static_cast<std::size_t>(i)] = eval(g[static_cast<std::size_t>(i)], env);
  for (auto j = elim_order.rbegin(); j != elim_order.rend(); ++j)
    env[static_cast<std::size_t>(*j)] = eval(g[static_cast<std::size_t>(*j)], env);
  return env;
}

std::vector<ExtNat> kleene(const PSE& s, int k) {
  std::vector<ExtNat> env(s.size(), ExtNat(0));
  for (int i = 0; i < k; i++) {
    std::vector<ExtNat> next(s.size());
    for (std::size_t j = 0; j < s.size(); j++) next[j] = eval(s.rhs[j], env);
    env = std::move(next);
  }
  return env;
}

std::vector<bool> solve_bool(const PSE& s) {
  std::vector<bool> b(s.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < s.size(); i++) {
      if (b[i]) continue;
      for (auto& [m, c] : s.rhs[i].terms) {
        bool all = true;
        for (auto& [v, e] : m.powers)
          if (!b[v]) {
            all = false;
            break;
          }
        if (all) {
          b[i] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return b;
}

}  // namespace pc
