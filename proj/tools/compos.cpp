// Command-line front end: check, fmt, compose, mediate, simulate, laws.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "compos/cli.hpp"

int main(int argc, char** argv) {
  using namespace compos::cli;

  Style style;
  const char* color_env = std::getenv("COMPOS_COLOR");
  style.color = isatty(fileno(stderr)) &&
                !(color_env && std::string(color_env) == "0");

  CLI::App app{"compos: compose, check and run component architectures"};
  app.require_subcommand(1);

  std::vector<std::string> check_paths;
  auto* check = app.add_subcommand("check", "Parse and validate .compos or .diagram files");
  check->add_option("paths", check_paths, "Input files")->required();

  std::string fmt_path;
  auto* fmt = app.add_subcommand("fmt", "Print a component in canonical form");
  fmt->add_option("path", fmt_path, "Component file")->required();

  std::string compose_in, compose_out, compose_name;
  auto* compose = app.add_subcommand("compose", "Compute the colimit of a diagram");
  compose->add_option("diagram", compose_in, "Diagram file")->required();
  compose->add_option("-o,--output", compose_out,
                      "Output component file; legs go next to it as .legs");
  compose->add_option("--name", compose_name, "Name of the composed component");

  std::string mediate_in, mediate_env;
  auto* mediate = app.add_subcommand(
      "mediate", "Check an environment cocone and print the mediating morphism");
  mediate->add_option("diagram", mediate_in, "Diagram file")->required();
  mediate->add_option("environment", mediate_env, "Declared environment")->required();

  SimulateOptions sim;
  std::string reach;
  auto* simulate = app.add_subcommand("simulate", "Run events or search for a goal");
  simulate->add_option("component", sim.component_path, "Component file")->required();
  simulate->add_option("schedule", sim.schedule, "Events to fire in order");
  simulate->add_option("--init", sim.init, "Comma-separated literals, e.g. \"!h,l\"");
  auto* reach_opt = simulate->add_option("--reach", reach, "Goal sentences to reach");
  simulate->add_option("--bound", sim.bound, "Maximum witness length")
      ->check(CLI::NonNegativeNumber);

  LawsCliOptions laws;
  auto* laws_cmd = app.add_subcommand("laws", "Randomized check of the category laws");
  laws_cmd->add_option("--seed", laws.seed, "Random seed");
  laws_cmd->add_option("--iters", laws.iterations, "Number of iterations");
  laws_cmd->add_option("--inject", laws.inject,
                       "Substitute a broken operation (compose-skip-events)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*check) return cmd_check(check_paths, std::cout, std::cerr, style);
  if (*fmt) return cmd_fmt(fmt_path, std::cout, std::cerr, style);
  if (*compose)
    return cmd_compose(compose_in, compose_out, compose_name, std::cout,
                       std::cerr, style);
  if (*mediate)
    return cmd_mediate(mediate_in, mediate_env, std::cout, std::cerr, style);
  if (*simulate) {
    if (*reach_opt) sim.reach = reach;
    if (sim.reach && !sim.schedule.empty()) {
      std::cerr << "error: give either a schedule or --reach, not both\n";
      return kUsage;
    }
    return cmd_simulate(sim, std::cout, std::cerr, style);
  }
  if (*laws_cmd) return cmd_laws(laws, std::cout, std::cerr, style);
  return kUsage;
}
