#include <iostream>

#include "CLI11.hpp"
#include "fintop/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite topological spaces, Morse hyper-graphs and Reeb graphs"};
  app.require_subcommand(1);
  fintop::RunConfig config;

  const std::pair<const char*, const char*> commands[] = {
      {"classify", "Closed, proper, recurrent and quasi-recurrent points"},
      {"elements", "Abstract elements and the element space"},
      {"morse", "Morse hyper-graph, associated graph and quotient check"},
      {"decomp", "Every decomposition operation on a decomposition file"},
      {"cell", "Abstract cell complex of a complex's face poset"},
      {"reeb", "Reeb graph and weak-element check of a scalar field"},
      {"verify", "Seeded property suites"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", config.input, "Input file");
    sub->add_option("--format", config.format, "space, decomp, complex or mesh")
        ->check(CLI::IsMember({"space", "decomp", "complex", "mesh"}));
    sub->add_option("--dot", config.dot_path, "Write a Graphviz file");
    sub->add_option("--json", config.json_path, "Write the report here instead of stdout");
    sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    sub->add_option("--trials", config.trials, "Trials per suite")->capture_default_str();
    sub->add_option("--workers", config.workers, "Threads for verify")->capture_default_str();
    sub->callback([&config, sub] { config.subcommand = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }
  return fintop::run(config, std::cout, std::cerr);
}
