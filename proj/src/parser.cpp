#include "purelog/parser.hpp"

#include <span>
#include <unordered_map>

namespace purelog {

namespace {

std::string pos_prefix(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
}

[[noreturn]] void fail(SourcePos pos, const std::string& message) {
  throw PrologError(ErrorKind::Syntax, pos_prefix(pos) + message);
}

bool token_starts_term(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::Name:
    case TokenKind::Variable:
    case TokenKind::Integer:
    case TokenKind::Float:
      return true;
    case TokenKind::Punct:
      return tok.text == "(" || tok.text == "[";
    default:
      return false;
  }
}

// Recursive-descent core over one clause's tokens. Variables are scoped to
// the clause: one map per Parser instance.
class Parser {
public:
  Parser(std::span<const Token> tokens, const OperatorTable& table, VarGen& vars)
      : tokens_(tokens), table_(table), vars_(vars) {}

  TermPtr parse_whole() {
    TermPtr t = parse(1200, true).term;
    if (!at_end()) fail(peek().pos, "unexpected token '" + peek().text + "'");
    return t;
  }

  const std::vector<std::pair<std::string, TermPtr>>& named_vars() const {
    return named_vars_;
  }

private:
  struct Parsed {
    TermPtr term;
    int priority = 0;
  };

  bool at_end() const { return index_ >= tokens_.size(); }

  const Token& peek(std::size_t ahead = 0) const {
    static const Token sentinel{TokenKind::End, "", {0, 0}};
    return index_ + ahead < tokens_.size() ? tokens_[index_ + ahead] : sentinel;
  }

  const Token& advance() { return tokens_[index_++]; }

  void expect_punct(const char* text) {
    if (at_end() || peek().kind != TokenKind::Punct || peek().text != text) {
      SourcePos pos = at_end() ? last_pos() : peek().pos;
      fail(pos, std::string("expected '") + text + "'");
    }
    advance();
  }

  SourcePos last_pos() const {
    return tokens_.empty() ? SourcePos{1, 1} : tokens_.back().pos;
  }

  TermPtr var_for(const std::string& name) {
    if (name == "_") return vars_.fresh("_");
    auto it = var_map_.find(name);
    if (it != var_map_.end()) return it->second;
    TermPtr v = vars_.fresh(name);
    var_map_.emplace(name, v);
    named_vars_.emplace_back(name, v);
    return v;
  }

  Parsed parse(int max_priority, bool comma_operator) {
    Parsed left = parse_primary(max_priority, comma_operator);
    for (;;) {
      if (at_end()) break;
      const Token& tok = peek();
      std::string opname;
      if (tok.kind == TokenKind::Punct && tok.text == "," && comma_operator) {
        opname = ",";
      } else if (tok.kind == TokenKind::Name) {
        opname = tok.text;
      } else {
        break;
      }

      if (const OpDef* in = table_.infix(opname)) {
        int lmax = in->type == OpType::YFX ? in->priority : in->priority - 1;
        int rmax = in->type == OpType::XFY ? in->priority : in->priority - 1;
        if (in->priority <= max_priority && left.priority <= lmax) {
          advance();
          Parsed right = parse(rmax, comma_operator);
          left = {Term::make_compound(opname, {left.term, right.term}),
                  in->priority};
          continue;
        }
      }
      if (const OpDef* post = table_.postfix(opname)) {
        int lmax = post->type == OpType::YF ? post->priority : post->priority - 1;
        if (post->priority <= max_priority && left.priority <= lmax) {
          advance();
          left = {Term::make_compound(opname, {left.term}), post->priority};
          continue;
        }
      }
      break;
    }
    return left;
  }

  Parsed parse_primary(int max_priority, bool comma_operator) {
    if (at_end()) fail(last_pos(), "unexpected end of clause");
    const Token& tok = advance();
    switch (tok.kind) {
      case TokenKind::Integer:
        return {Term::make_int(tok.int_value), 0};
      case TokenKind::Float:
        return {Term::make_float(tok.float_value), 0};
      case TokenKind::Variable:
        return {var_for(tok.text), 0};
      case TokenKind::Punct: {
        if (tok.text == "(") {
          TermPtr inner = parse(1200, true).term;
          expect_punct(")");
          return {inner, 0};
        }
        if (tok.text == "[") return parse_list();
        fail(tok.pos, "unexpected token '" + tok.text + "'");
      }
      case TokenKind::Name:
        return parse_name(tok, max_priority, comma_operator);
      case TokenKind::End:
        fail(tok.pos, "unexpected end of clause");
    }
    fail(tok.pos, "unexpected token");
  }

  Parsed parse_name(const Token& tok, int max_priority, bool comma_operator) {
    // functional notation needs the '(' glued to the name
    if (!at_end() && peek().kind == TokenKind::Punct && peek().text == "(" &&
        !peek().layout_before) {
      advance();
      std::vector<TermPtr> args;
      for (;;) {
        args.push_back(parse(1200, false).term);
        if (!at_end() && peek().kind == TokenKind::Punct && peek().text == ",") {
          advance();
          continue;
        }
        break;
      }
      expect_punct(")");
      return {Term::make_compound(tok.text, std::move(args)), 0};
    }

    if (const OpDef* pre = table_.prefix(tok.text)) {
      // a prefix minus glues onto a numeric literal
      if (tok.text == "-" && !at_end()) {
        const Token& next = peek();
        if (next.kind == TokenKind::Integer) {
          advance();
          return {Term::make_int(-next.int_value), 0};
        }
        if (next.kind == TokenKind::Float) {
          advance();
          return {Term::make_float(-next.float_value), 0};
        }
      }
      if (pre->priority <= max_priority && !at_end() &&
          token_starts_term(peek())) {
        int amax = pre->type == OpType::FY ? pre->priority : pre->priority - 1;
        Parsed arg = parse(amax, comma_operator);
        return {Term::make_compound(tok.text, {arg.term}), pre->priority};
      }
    }
    return {Term::make_const(tok.text), 0};
  }

  Parsed parse_list() {
    if (!at_end() && peek().kind == TokenKind::Punct && peek().text == "]") {
      advance();
      return {nil_term(), 0};
    }
    std::vector<TermPtr> elems;
    TermPtr tail = nil_term();
    for (;;) {
      elems.push_back(parse(1200, false).term);
      if (!at_end() && peek().kind == TokenKind::Punct) {
        if (peek().text == ",") {
          advance();
          continue;
        }
        if (peek().text == "|") {
          advance();
          tail = parse(1200, false).term;
        }
      }
      break;
    }
    expect_punct("]");
    return {make_list(elems, tail), 0};
  }

  std::span<const Token> tokens_;
  const OperatorTable& table_;
  VarGen& vars_;
  std::size_t index_ = 0;
  std::unordered_map<std::string, TermPtr> var_map_;
  std::vector<std::pair<std::string, TermPtr>> named_vars_;
};

bool is_conj(const TermPtr& t) {
  return t->is_compound() && t->name() == "," && t->arity() == 2;
}

void flatten_into(const TermPtr& t, std::vector<TermPtr>& out) {
  if (is_conj(t)) {
    flatten_into(t->args()[0], out);
    flatten_into(t->args()[1], out);
    return;
  }
  out.push_back(t);
}

void validate_head(const TermPtr& head, SourcePos pos) {
  if (head->is_var()) fail(pos, "clause head is a variable");
  if (head->is_number()) fail(pos, "clause head is a number");
}

ParsedClause extract_clause(const TermPtr& t, SourcePos pos) {
  ParsedClause clause;
  clause.pos = pos;
  if (t->is_compound() && t->name() == ":-" && t->arity() == 1) {
    clause.kind = ParsedClause::Kind::Directive;
    clause.goal = t->args()[0];
    return clause;
  }
  if (t->is_compound() && t->name() == ":-" && t->arity() == 2) {
    clause.kind = ParsedClause::Kind::Rule;
    clause.head = t->args()[0];
    validate_head(clause.head, pos);
    clause.body_term = t->args()[1];
    clause.body = flatten_conjunction(clause.body_term);
    return clause;
  }
  clause.kind = ParsedClause::Kind::Fact;
  clause.head = t;
  validate_head(clause.head, pos);
  clause.body_term = Term::make_const("true");
  return clause;
}

// op/3 directives with literal arguments reshape parsing of the rest of the
// file, so they are applied as soon as they are read.
void apply_op_directive(const ParsedClause& clause, OperatorTable& table) {
  if (clause.kind != ParsedClause::Kind::Directive) return;
  const TermPtr& g = clause.goal;
  if (!g->is_compound() || g->name() != "op" || g->arity() != 3) return;
  const TermPtr& p = g->args()[0];
  const TermPtr& t = g->args()[1];
  const TermPtr& n = g->args()[2];
  if (!p->is_int() || !t->is_const() || !n->is_const()) return;
  auto type = op_type_from_name(t->name());
  if (!type) {
    throw PrologError(ErrorKind::Domain,
                      "unknown operator type '" + t->name() + "'");
  }
  table.declare(static_cast<int>(p->int_value()), *type, n->name());
}

}  // namespace

std::vector<TermPtr> flatten_conjunction(const TermPtr& t) {
  std::vector<TermPtr> out;
  flatten_into(t, out);
  return out;
}

TermPtr parse_term_text(std::string_view text, const OperatorTable& table,
                        VarGen& vars) {
  std::vector<Token> tokens = tokenize(text);
  if (!tokens.empty() && tokens.back().kind == TokenKind::End) tokens.pop_back();
  if (tokens.empty()) fail({1, 1}, "empty term");
  Parser parser(std::span<const Token>(tokens), table, vars);
  return parser.parse_whole();
}

ParsedQuery parse_query(std::string_view text, const OperatorTable& table,
                        VarGen& vars) {
  std::vector<Token> tokens = tokenize(text);
  if (!tokens.empty() && tokens.front().kind == TokenKind::Name &&
      tokens.front().text == "?-") {
    tokens.erase(tokens.begin());
  }
  if (tokens.empty()) fail({1, 1}, "empty query");
  if (tokens.back().kind != TokenKind::End) {
    fail(tokens.back().pos, "query does not end with '.'");
  }
  tokens.pop_back();
  if (tokens.empty()) fail({1, 1}, "empty query");
  Parser parser(std::span<const Token>(tokens), table, vars);
  ParsedQuery query;
  query.goal_term = parser.parse_whole();
  query.goals = flatten_conjunction(query.goal_term);
  for (const auto& [name, var] : parser.named_vars()) {
    query.named_vars.emplace_back(name, var);
  }
  return query;
}

ProgramParse parse_program(std::string_view text, OperatorTable& table,
                           VarGen& vars) {
  ProgramParse out;
  std::vector<Token> tokens;
  try {
    tokens = tokenize(text);
  } catch (const PrologError& e) {
    out.errors.push_back(e.detail());
    return out;
  }

  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].kind == TokenKind::End) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < tokens.size() && tokens[j].kind != TokenKind::End) ++j;
    if (j == tokens.size()) {
      out.errors.push_back(pos_prefix(tokens[i].pos) +
                           "clause does not end with '.'");
      break;
    }
    try {
      Parser parser(std::span<const Token>(tokens).subspan(i, j - i), table,
                    vars);
      TermPtr t = parser.parse_whole();
      ParsedClause clause = extract_clause(t, tokens[i].pos);
      apply_op_directive(clause, table);
      out.clauses.push_back(std::move(clause));
    } catch (const PrologError& e) {
      if (e.kind() == ErrorKind::Syntax) {
        out.errors.push_back(e.detail());
      } else {
        out.errors.push_back(pos_prefix(tokens[i].pos) + e.what());
      }
    }
    i = j + 1;
  }
  return out;
}

}  // namespace purelog
