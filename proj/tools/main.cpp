#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "proofcount/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"proofcount: count and enumerate normal fair proofs of propositional formulas"};
  app.require_subcommand(1);

  pc::RunConfig cfg;
  std::string logic = "classical";
  const std::map<std::string, pc::Logic> logic_map = {
      {"classical", pc::Logic::Classical},
      {"intuitionistic", pc::Logic::Intuitionistic},
      {"minimal", pc::Logic::Minimal},
  };

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--logic", logic, "classical | intuitionistic | minimal")
        ->check(CLI::IsMember({"classical", "intuitionistic", "minimal"}));
    sub->add_flag("--eta-long", cfg.mode.eta_long, "restrict to eta-long normal form");
  };

  auto* count = app.add_subcommand("count", "count proofs of a formula");
  add_mode(count);
  count->add_option("formula", cfg.input, "formula, or - for stdin");
  count->add_option("--corpus", cfg.corpus, "file with one formula per line");
  count->add_flag("--json", cfg.json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "list proofs up to a size bound");
  add_mode(enumerate);
  enumerate->add_option("formula", cfg.input)->required();
  enumerate->add_option("--max-size", cfg.max_size, "size bound (default 12)")
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--json", cfg.json);

  auto* equations = app.add_subcommand("equations", "emit the polynomial system and its solution");
  add_mode(equations);
  equations->add_option("formula", cfg.input)->required();

  auto* check = app.add_subcommand("check", "check a proof term against a formula");
  add_mode(check);
  check->add_option("formula", cfg.input)->required();
  check->add_option("term", cfg.term)->required();

  auto* reverse = app.add_subcommand("reverse", "formulas realizing a polynomial system");
  reverse->add_option("system", cfg.input, "PSE document (JSON), a path to one, or -")->required();
  reverse->add_flag("--json", cfg.json);

  CLI11_PARSE(app, argc, argv);

  if (count->parsed()) cfg.cmd = pc::RunConfig::Cmd::Count;
  if (enumerate->parsed()) cfg.cmd = pc::RunConfig::Cmd::Enumerate;
  if (equations->parsed()) cfg.cmd = pc::RunConfig::Cmd::Equations;
  if (check->parsed()) cfg.cmd = pc::RunConfig::Cmd::Check;
  if (reverse->parsed()) cfg.cmd = pc::RunConfig::Cmd::Reverse;
  cfg.mode.logic = logic_map.at(logic);

  if (cfg.cmd == pc::RunConfig::Cmd::Count && cfg.input.empty() && cfg.corpus.empty()) {
    std::cerr << "count: a formula or --corpus is required\n";
    return 1;
  }
  return pc::run(cfg, std::cout, std::cerr);
}
