#include "hycause/commands.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  using namespace hycause;

  CLI::App app{"Causal analysis of timed action scenarios over hybrid theories"};
  app.require_subcommand(1, 1);

  CommandOptions o;
  std::string format = "json";
  std::string at;

  struct Command {
    const char* name;
    const char* help;
    bool scenario;
    bool effect;
  };
  const Command commands[] = {
      {"validate", "check a theory file", false, false},
      {"run", "print the timeline of a scenario", true, false},
      {"eval", "evaluate an effect at every prefix", true, true},
      {"cause", "find the primary cause of an effect", true, true},
      {"defuse", "build the defused scenario and its timeline", true, true},
      {"butfor", "run the modified but-for test", true, true},
      {"check", "verify invariants on random settings", false, false},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    if (std::string(s.name) == "check") {
      sub->add_option("--seed", o.seed, "generator seed");
      sub->add_option("--cases", o.cases, "number of settings");
      continue;
    }
    sub->add_option("--theory", o.theory_path, "theory file")->required();
    if (!s.scenario) continue;
    sub->add_option("--scenario", o.scenario_path, "scenario file")->required();
    sub->add_option("--at", at, "query time, e.g. 30 or 61/2");
    sub->add_flag("--at-start", o.at_start, "append noOp at the query time when it lies inside the last situation");
    if (!s.effect) continue;
    sub->add_option("--effect", o.effect, "effect formula or comparison")->required();
    sub->add_flag("--single-removal", o.single_removal, "replace only the primary cause");
    sub->add_option("--seed", o.seed, "generator seed, used by check");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (const char* env = std::getenv("HYCAUSE_FORMAT")) {
    std::string v(env);
    if (v == "json" || v == "text") format = v;
  }
  o.format = format == "text" ? Format::Text : Format::Json;
  if (!at.empty()) {
    auto t = parse_rational(at);
    if (!t) {
      std::cerr << "hycause: --at: not a number: " << at << "\n";
      return kExitParse;
    }
    o.at = *t;
  }

  CommandResult r = run_command(app.get_subcommands().front()->get_name(), o);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
