#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "purelog/engine.hpp"

namespace purelog {

struct SessionConfig {
  std::vector<std::string> files;
  std::optional<std::string> goal;
  bool occur_check = false;
  std::optional<std::uint64_t> step_limit;
  bool quiet = false;
};

// "Name = value" lines for the named query variables; variables that are
// still themselves are omitted. Empty means the answer is just "yes".
std::vector<std::string> solution_lines(const Solution& solution,
                                        const OperatorTable& table);

// Interactive loop: reads queries up to '.', prints answers, takes ';' for
// more solutions and an empty line to accept. Returns a process exit code.
int run_repl(const SessionConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err);

// Runs one goal: exit 0 with bindings or "yes", 1 on failure, 2 on error.
int run_goal(const SessionConfig& config, const std::string& goal_text,
             std::ostream& out, std::ostream& err);

// Dispatches between run_goal and run_repl based on config.goal.
int run_session(const SessionConfig& config, std::istream& in,
                std::ostream& out, std::ostream& err);

}  // namespace purelog
