#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "purelog/repl.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pure Prolog interpreter"};

  purelog::SessionConfig config;
  std::string goal;
  std::uint64_t steps = 0;

  app.add_option("files", config.files, "programs to consult");
  auto* goal_opt = app.add_option("-g,--goal", goal, "run one goal and exit");
  app.add_flag("--occur-check", config.occur_check,
               "unify with the occur check");
  auto* steps_opt = app.add_option(
      "--steps", steps, "abort a query after this many resolution steps");
  app.add_flag("-q,--quiet", config.quiet, "suppress the banner");

  CLI11_PARSE(app, argc, argv);

  if (*goal_opt) config.goal = goal;
  if (*steps_opt) config.step_limit = steps;

  return purelog::run_session(config, std::cin, std::cout, std::cerr);
}
