#include "proofcount/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "proofcount/check.hpp"
#include "proofcount/enumerate.hpp"
#include "proofcount/pse_io.hpp"
#include "proofcount/reverse.hpp"

namespace pc {

namespace {

using nlohmann::ordered_json;

std::string logic_name(Logic l) {
  switch (l) {
    case Logic::Classical: return "classical";
    case Logic::Intuitionistic: return "intuitionistic";
    case Logic::Minimal: return "minimal";
  }
  return "";
}

std::string read_input(const std::string& input) {
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return input;
}

ordered_json header(const RunConfig& cfg, const std::string& formula_text) {
  ordered_json j;
  j["formula"] = formula_text;
  j["logic"] = logic_name(cfg.mode.logic);
  j["eta_long"] = cfg.mode.eta_long;
  return j;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> inputs;
  if (!cfg.corpus.empty()) {
    std::ifstream f(cfg.corpus);
    if (!f) throw std::invalid_argument("cannot open corpus file " + cfg.corpus);
    std::string line;
    while (std::getline(f, line))
      if (!line.empty()) inputs.push_back(line);
  } else {
    inputs.push_back(read_input(cfg.input));
  }
  for (const std::string& text : inputs) {
    ExtNat n = count(parse_formula(text), cfg.mode);
    if (cfg.json) {
      ordered_json j = header(cfg, text);
      j["count"] = n.str() == "w" ? "omega" : n.str();
      out << j.dump(2) << "\n";
    } else {
      out << (n.is_omega() ? "omega" : std::to_string(n.value())) << "\n";
    }
  }
  return 0;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  Formula f = parse_formula(read_input(cfg.input));
  Enumerator en(cfg.mode);
  std::vector<Term> ts = en.terms(goal_of(f), cfg.max_size);
  if (cfg.json) {
    ordered_json j = header(cfg, render(f));
    ordered_json proofs = ordered_json::array();
    for (const Term& t : ts)
      proofs.push_back({{"size", term_size(t)}, {"term", print_term(prettify(t))}});
    j["proofs"] = proofs;
    out << j.dump(2) << "\n";
  } else {
    for (const Term& t : ts) out << term_size(t) << " " << print_term(prettify(t)) << "\n";
  }
  return 0;
}

int cmd_equations(const RunConfig& cfg, std::ostream& out) {
  Formula f = parse_formula(read_input(cfg.input));
  BuildResult r = build(goal_of(f), cfg.mode);
  std::vector<ExtNat> sol = solve_min(r.system);

  ordered_json j = header(cfg, render(f));
  j["count"] = extnat_to_json(sol[static_cast<std::size_t>(r.root)]);
  ordered_json sys = pse_to_json(r.system);
  j["variables"] = sys["variables"];
  j["equations"] = sys["equations"];
  ordered_json goals = ordered_json::object();
  for (std::size_t i = 0; i < r.goals.size(); i++)
    goals[r.system.names[i]] = goal_to_json(r.goals[i]);
  j["goals"] = goals;
  ordered_json solution = ordered_json::object();
  for (std::size_t i = 0; i < sol.size(); i++)
    solution[r.system.names[i]] = extnat_to_json(sol[i]);
  j["solution"] = solution;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  Formula f = parse_formula(read_input(cfg.input));
  Goal g = goal_of(f);
  Term t = parse_term(cfg.term, g);

  if (auto diag = typecheck_diag(g, t)) {
    out << "typecheck: FAIL (" << *diag << ")\n";
    return 1;
  }
  out << "typecheck: ok\n";
  bool ok = true;
  if (is_normal(t)) {
    out << "normal: ok\n";
  } else {
    out << "normal: FAIL\n";
    ok = false;
  }
  if (is_fair(g, t)) {
    out << "fair: ok\n";
  } else {
    out << "fair: FAIL\n";
    ok = false;
  }
  if (cfg.mode.eta_long) {
    if (is_normal(t) && is_eta_long(g, t)) {
      out << "eta_long: ok\n";
    } else {
      out << "eta_long: FAIL\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

int cmd_reverse(const RunConfig& cfg, std::ostream& out) {
  std::string text = cfg.input;
  if (text == "-") {
    text = read_input("-");
  } else if (std::ifstream f(text); f) {
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  PSE s = pse_from_json(nlohmann::json::parse(text));
  ReverseOutput r = formulae_of(s);
  if (cfg.json) {
    ordered_json j;
    ordered_json atoms = ordered_json::array();
    for (auto& a : r.ground_atoms) atoms.push_back(render(a));
    ordered_json fs = ordered_json::array();
    for (auto& a : r.formulas) fs.push_back(render(a));
    j["atoms"] = atoms;
    j["formulas"] = fs;
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < r.formulas.size(); i++)
      out << s.names[i] << ": " << render(r.formulas[i]) << "\n";
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.cmd) {
      case RunConfig::Cmd::Count: return cmd_count(cfg, out);
      case RunConfig::Cmd::Enumerate: return cmd_enumerate(cfg, out);
      case RunConfig::Cmd::Equations: return cmd_equations(cfg, out);
      case RunConfig::Cmd::Check: return cmd_check(cfg, out);
      case RunConfig::Cmd::Reverse: return cmd_reverse(cfg, out);
    }
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pc
