#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "purelog/lexer.hpp"
#include "purelog/ops.hpp"
#include "purelog/term.hpp"

namespace purelog {

struct ParsedClause {
  enum class Kind { Fact, Rule, Directive };

  Kind kind = Kind::Fact;
  TermPtr head;                // Fact and Rule
  std::vector<TermPtr> body;   // Rule goals, conjunction flattened
  TermPtr body_term;           // 'true' for facts, the body chain for rules
  TermPtr goal;                // Directive
  SourcePos pos;
};

struct ParsedQuery {
  TermPtr goal_term;
  std::vector<TermPtr> goals;
  // named (non-anonymous) variables in first-occurrence order
  std::vector<std::pair<std::string, TermPtr>> named_vars;
};

struct ProgramParse {
  std::vector<ParsedClause> clauses;
  std::vector<std::string> errors;  // "line:col: message"
};

// Parses one term; trailing end dot is optional. Throws ErrorKind::Syntax.
TermPtr parse_term_text(std::string_view text, const OperatorTable& table,
                        VarGen& vars);

// Parses a query terminated by '.'; a leading "?-" is tolerated.
ParsedQuery parse_query(std::string_view text, const OperatorTable& table,
                        VarGen& vars);

// Parses a clause sequence. op/3 directives take effect immediately for the
// rest of the text; bad clauses are reported and skipped.
ProgramParse parse_program(std::string_view text, OperatorTable& table,
                           VarGen& vars);

std::vector<TermPtr> flatten_conjunction(const TermPtr& t);

}  // namespace purelog
