#include "purelog/repl.hpp"

#include <istream>
#include <ostream>

#include "purelog/lexer.hpp"
#include "purelog/writer.hpp"

namespace purelog {

namespace {

std::string trim(const std::string& s) {
  std::size_t from = s.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) return "";
  std::size_t to = s.find_last_not_of(" \t\r\n");
  return s.substr(from, to - from + 1);
}

bool query_complete(const std::string& text) {
  try {
    for (const Token& tok : tokenize(text)) {
      if (tok.kind == TokenKind::End) return true;
    }
    return false;
  } catch (const PrologError&) {
    return true;  // let the parser report it
  }
}

// consult errors are diagnostics, not a reason to stop the session
bool load_files(Machine& machine, const SessionConfig& config,
                std::ostream& err) {
  for (const std::string& file : config.files) {
    try {
      ConsultReport report = machine.consult_file(file);
      for (const std::string& e : report.errors) err << "Error: " << e << "\n";
      for (const std::string& w : report.warnings) {
        err << "Warning: " << w << "\n";
      }
    } catch (const PrologError& e) {
      err << e.display() << "\n";
      return false;
    }
  }
  return true;
}

Machine make_machine(const SessionConfig& config) {
  return Machine(MachineOptions{config.occur_check, config.step_limit});
}

// Prints one answer; true when the caller should ask for another solution.
bool present_solution(const Solution& solution, Machine& machine,
                      std::istream& in, std::ostream& out, bool interactive) {
  std::vector<std::string> lines = solution_lines(solution, machine.operators());
  if (lines.empty()) {
    out << "yes\n";
    return false;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << lines[i] << (i + 1 < lines.size() ? ",\n" : "\n");
  }
  if (!interactive) return false;
  std::string decision;
  if (!std::getline(in, decision)) return false;
  return !trim(decision).empty() && trim(decision)[0] == ';';
}

}  // namespace

std::vector<std::string> solution_lines(const Solution& solution,
                                        const OperatorTable& table) {
  VarNamer namer;
  for (const auto& [name, value] : solution.bindings) {
    if (value->is_var()) namer.reserve(*value, name);
  }
  std::vector<std::string> lines;
  for (const auto& [name, value] : solution.bindings) {
    if (value->is_var() && namer.name_for(*value) == name) continue;
    lines.push_back(name + " = " + write_term(value, table, 999, &namer));
  }
  return lines;
}

int run_repl(const SessionConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err) {
  Machine machine = make_machine(config);
  if (!load_files(machine, config, err)) return 2;
  if (!config.quiet) out << "purelog (queries end with '.')\n";

  std::string buffer;
  for (;;) {
    out << (buffer.empty() ? "?- " : "   ");
    out.flush();
    std::string line;
    if (!std::getline(in, line)) break;
    buffer += line;
    buffer += "\n";
    if (trim(buffer).empty()) {
      buffer.clear();
      continue;
    }
    if (!query_complete(buffer)) continue;
    std::string text = buffer;
    buffer.clear();

    try {
      Query query = machine.solve(text);
      for (;;) {
        std::optional<Solution> solution = query.next();
        if (!solution) {
          out << "no\n";
          break;
        }
        if (!present_solution(*solution, machine, in, out, true)) {
          query.close();
          break;
        }
      }
    } catch (const PrologError& e) {
      out << e.display() << "\n";
    }
  }
  return 0;
}

int run_goal(const SessionConfig& config, const std::string& goal_text,
             std::ostream& out, std::ostream& err) {
  Machine machine = make_machine(config);
  if (!load_files(machine, config, err)) return 2;

  std::string text = trim(goal_text);
  if (text.empty()) {
    err << "Error: syntax: empty goal\n";
    return 2;
  }
  if (text.back() != '.') text += '.';

  try {
    Query query = machine.solve(text);
    std::optional<Solution> solution = query.next();
    if (!solution) {
      out << "no\n";
      return 1;
    }
    std::vector<std::string> lines =
        solution_lines(*solution, machine.operators());
    if (lines.empty()) {
      out << "yes\n";
    } else {
      for (std::size_t i = 0; i < lines.size(); ++i) {
        out << lines[i] << (i + 1 < lines.size() ? ",\n" : "\n");
      }
    }
    query.close();
    return 0;
  } catch (const PrologError& e) {
    err << e.display() << "\n";
    return 2;
  }
}

int run_session(const SessionConfig& config, std::istream& in,
                std::ostream& out, std::ostream& err) {
  if (config.goal) return run_goal(config, *config.goal, out, err);
  return run_repl(config, in, out, err);
}

}  // namespace purelog
