#include "proofcount/pse_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace pc {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json extnat_to_json(ExtNat v) {
  if (v.is_omega()) return "omega";
  return v.value();
}

ExtNat extnat_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "omega" || s == "w") return ExtNat::omega();
    throw std::invalid_argument("expected a natural number or \"omega\", got \"" + s + "\"");
  }
  if (!j.is_number_unsigned())
    throw std::invalid_argument("expected a natural number or \"omega\"");
  return ExtNat(j.get<std::uint64_t>());
}

ordered_json pse_to_json(const PSE& s) {
  ordered_json out;
  out["variables"] = s.names;
  ordered_json eqs = ordered_json::object();
  for (std::size_t i = 0; i < s.size(); i++) {
    ordered_json monos = ordered_json::array();
    for (const auto& [m, c] : s.rhs[i].terms) {
      ordered_json mono;
      mono["coefficient"] = extnat_to_json(c);
      ordered_json exps = ordered_json::object();
      for (auto& [v, e] : m.powers) exps[s.names[static_cast<std::size_t>(v)]] = e;
      mono["exponents"] = exps;
      monos.push_back(mono);
    }
    eqs[s.names[i]] = monos;
  }
  out["equations"] = eqs;
  return out;
}

PSE pse_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("equations"))
    throw std::invalid_argument("PSE document needs \"variables\" and \"equations\"");
  PSE s;
  for (const auto& v : j.at("variables")) {
    if (!v.is_string()) throw std::invalid_argument("variable names must be strings");
    s.names.push_back(v.get<std::string>());
  }
  auto var_id = [&](const std::string& n) -> VarId {
    auto it = std::find(s.names.begin(), s.names.end(), n);
    if (it == s.names.end()) throw std::invalid_argument("unknown variable \"" + n + "\"");
    return static_cast<VarId>(it - s.names.begin());
  };
  const json& eqs = j.at("equations");
  for (const std::string& n : s.names) {
    if (!eqs.contains(n)) throw std::invalid_argument("missing equation for \"" + n + "\"");
    Polynomial p;
    for (const auto& mono : eqs.at(n)) {
      ExtNat c = extnat_from_json(mono.at("coefficient"));
      Monomial m;
      if (mono.contains("exponents"))
        for (auto& [vn, e] : mono.at("exponents").items()) {
          if (!e.is_number_unsigned() || e.get<std::uint64_t>() == 0)
            throw std::invalid_argument("exponents must be positive naturals");
          m.powers.push_back({var_id(vn), e.get<int>()});
        }
      std::sort(m.powers.begin(), m.powers.end());
      Polynomial t;
      t.terms.push_back({std::move(m), c});
      p = p + t;
    }
    s.rhs.push_back(std::move(p));
  }
  return s;
}

ordered_json goal_to_json(const Goal& g) {
  ordered_json out;
  out["conclusion"] = render(g.conclusion);
  ordered_json lam = ordered_json::array();
  for (auto& h : g.lambda_hyps) lam.push_back({{"name", h.name}, {"type", render(h.type)}});
  ordered_json mu = ordered_json::array();
  for (auto& h : g.mu_hyps) mu.push_back({{"name", h.name}, {"type", render(h.type)}});
  out["lambda"] = lam;
  out["mu"] = mu;
  return out;
}

}  // namespace pc
