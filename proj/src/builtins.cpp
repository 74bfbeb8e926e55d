#include "purelog/builtins.hpp"

#include "purelog/engine.hpp"
#include "purelog/unify.hpp"

namespace purelog {

const std::vector<BuiltinInfo>& builtin_table() {
  static const std::vector<BuiltinInfo> table = {
      {"=", 2, true},    {"true", 0, true},  {"fail", 0, true},
      {"!", 0, true},    {",", 2, false},    {";", 2, false},
      {"->", 2, false},  {"not", 1, false},  {"call", 1, false},
      {"is", 2, true},   {"<", 2, true},     {"=<", 2, true},
      {"=:=", 2, true},  {"=\\=", 2, true},  {">=", 2, true},
      {">", 2, true},    {"=..", 2, true},   {"clause", 2, false},
      {"op", 3, true},
  };
  return table;
}

bool is_builtin(std::string_view name, std::size_t arity) {
  for (const BuiltinInfo& b : builtin_table()) {
    if (b.name == name && b.arity == arity) return true;
  }
  return false;
}

namespace {

Number int_number(std::int64_t v) { return {false, v, 0.0}; }
Number float_number(double v) { return {true, 0, v}; }

[[noreturn]] void overflow_error(const char* op) {
  throw PrologError(ErrorKind::Arithmetic,
                    std::string("integer overflow in ") + op);
}

Number eval_node(const TermPtr& t);

Number eval_binary(const std::string& op, const TermPtr& lt, const TermPtr& rt) {
  Number l = eval_node(lt);
  Number r = eval_node(rt);
  if (op == "//") {
    if (l.is_float || r.is_float) {
      throw PrologError(ErrorKind::Type, "// requires integer arguments");
    }
    if (r.ival == 0) {
      throw PrologError(ErrorKind::Arithmetic, "division by zero");
    }
    if (l.ival == INT64_MIN && r.ival == -1) overflow_error("//");
    return int_number(l.ival / r.ival);
  }
  if (l.is_float || r.is_float) {
    double a = l.as_double();
    double b = r.as_double();
    if (op == "+") return float_number(a + b);
    if (op == "-") return float_number(a - b);
    return float_number(a * b);
  }
  std::int64_t out = 0;
  if (op == "+") {
    if (__builtin_add_overflow(l.ival, r.ival, &out)) overflow_error("+");
  } else if (op == "-") {
    if (__builtin_sub_overflow(l.ival, r.ival, &out)) overflow_error("-");
  } else {
    if (__builtin_mul_overflow(l.ival, r.ival, &out)) overflow_error("*");
  }
  return int_number(out);
}

// t is fully resolved: no bound variables remain below it
Number eval_node(const TermPtr& t) {
  switch (t->tag()) {
    case TermTag::Var:
      throw PrologError(ErrorKind::Instantiation,
                        "unbound variable in arithmetic expression");
    case TermTag::Int:
      return int_number(t->int_value());
    case TermTag::Float:
      return float_number(t->float_value());
    case TermTag::Const:
      throw PrologError(ErrorKind::Type, debug_string(t) + " is not a number");
    case TermTag::Compound: {
      const std::string& f = t->name();
      if (t->arity() == 2 && (f == "+" || f == "-" || f == "*" || f == "//")) {
        return eval_binary(f, t->args()[0], t->args()[1]);
      }
      if (t->arity() == 1 && f == "-") {
        Number v = eval_node(t->args()[0]);
        if (v.is_float) return float_number(-v.fval);
        if (v.ival == INT64_MIN) overflow_error("-");
        return int_number(-v.ival);
      }
      throw PrologError(ErrorKind::Type,
                        f + "/" + std::to_string(t->arity()) +
                            " is not an arithmetic function");
    }
  }
  throw PrologError(ErrorKind::Type, "bad arithmetic expression");
}

}  // namespace

Number eval_gae(const TermPtr& t, const Bindings& bindings) {
  // resolving first also rejects cyclic expressions
  return eval_node(bindings.resolve(t));
}

TermPtr number_term(const Number& n) {
  return n.is_float ? Term::make_float(n.fval) : Term::make_int(n.ival);
}

namespace {

TermPtr cut_atom() {
  static const TermPtr t = Term::make_const("!");
  return t;
}

TermPtr fail_atom() {
  static const TermPtr t = Term::make_const("fail");
  return t;
}

int compare_numbers(const Number& l, const Number& r) {
  if (!l.is_float && !r.is_float) {
    if (l.ival < r.ival) return -1;
    return l.ival == r.ival ? 0 : 1;
  }
  double a = l.as_double();
  double b = r.as_double();
  if (a < b) return -1;
  return a == b ? 0 : 1;
}

void check_callable_arg(const TermPtr& goal, const char* who) {
  if (goal->is_var()) {
    throw PrologError(ErrorKind::Instantiation,
                      std::string(who) + " called with an unbound argument");
  }
  if (goal->is_number()) {
    throw PrologError(ErrorKind::Type,
                      debug_string(goal) + " is not a callable goal");
  }
}

}  // namespace

// Branches are cut transparent: a cut inside either one also discards the
// other branch and cuts through to the enclosing clause.
void Machine::solve_disjunction(const TermPtr& goal) {
  const TermPtr& left = bindings_.deref(goal->args()[0]);
  if (left->is_compound() && left->name() == "->" && left->arity() == 2) {
    solve_if_then_else(left->args()[0], left->args()[1], goal->args()[1], true);
    return;
  }
  GoalList alternative = push_goal(goals_, goal->args()[1]);
  cps_.push_back({std::move(alternative), bindings_.mark(), GoalAlternative{}});
  goals_ = push_goal(goals_, goal->args()[0]);
}

// Layout, top of the goal stack first:
//   condition, barrier(hc), !, barrier(h0), then-goal, rest
// The inner cut removes the else choice point and everything the condition
// pushed, so the condition commits to its first solution. Both barriers are
// consumed before the then-goal runs, leaving the branches cut transparent;
// only the condition is opaque.
void Machine::solve_if_then_else(TermPtr cond, TermPtr then_goal,
                                 TermPtr else_goal, bool has_else) {
  const std::size_t h0 = cps_.size();
  if (has_else) {
    GoalList alternative = push_goal(goals_, std::move(else_goal));
    cps_.push_back({std::move(alternative), bindings_.mark(), GoalAlternative{}});
  }
  const std::size_t hc = cps_.size();
  GoalList g = push_goal(goals_, std::move(then_goal));
  g = push_barrier(std::move(g), h0);
  g = push_goal(std::move(g), cut_atom());
  g = push_barrier(std::move(g), hc);
  g = push_goal(std::move(g), std::move(cond));
  goals_ = std::move(g);
}

// not(G) runs G, !, fail against an empty alternative: negation as failure.
void Machine::solve_negation(const TermPtr& goal) {
  const TermPtr& inner = bindings_.deref(goal->args()[0]);
  check_callable_arg(inner, "not/1");
  const std::size_t h0 = cps_.size();
  cps_.push_back({goals_, bindings_.mark(), GoalAlternative{}});
  GoalList g = push_goal(goals_, fail_atom());
  g = push_barrier(std::move(g), h0);
  g = push_goal(std::move(g), cut_atom());
  g = push_barrier(std::move(g), h0 + 1);
  g = push_goal(std::move(g), inner);
  goals_ = std::move(g);
}

void Machine::solve_call(const TermPtr& goal) {
  const TermPtr& inner = bindings_.deref(goal->args()[0]);
  check_callable_arg(inner, "call/1");
  goals_ = push_goal(push_barrier(goals_, cps_.size()), inner);
}

bool Machine::solve_clause_lookup(const TermPtr& head_arg,
                                  const TermPtr& body_arg) {
  const TermPtr& head = bindings_.deref(head_arg);
  if (head->is_var()) {
    throw PrologError(ErrorKind::Instantiation, "clause/2 head is unbound");
  }
  if (head->is_number()) {
    throw PrologError(ErrorKind::Type,
                      debug_string(head) + " is not a callable clause head");
  }
  if (is_builtin(head->name(), head->arity())) {
    throw PrologError(ErrorKind::Permission,
                      "cannot inspect built-in procedure " + head->name() +
                          "/" + std::to_string(head->arity()));
  }
  auto clauses = database_.find(head->name(), head->arity());
  if (!clauses) return false;
  cps_.push_back({goals_, bindings_.mark(),
                  ClauseEnumeration{head, body_arg, std::move(clauses), 0}});
  return backtrack();
}

bool Machine::solve_univ(const TermPtr& term_arg, const TermPtr& list_arg) {
  const TermPtr& t = bindings_.deref(term_arg);
  if (!t->is_var()) {
    std::vector<TermPtr> items;
    if (t->is_compound()) {
      items.push_back(Term::make_const(t->name()));
      for (const TermPtr& a : t->args()) items.push_back(a);
    } else {
      items.push_back(t);
    }
    return unify(list_arg, make_list(items), bindings_, occur_check_);
  }

  // build a term from the list side
  std::vector<TermPtr> items;
  TermPtr node = bindings_.deref(list_arg);
  while (node->is_compound() && node->name() == "." && node->arity() == 2) {
    items.push_back(node->args()[0]);
    node = bindings_.deref(node->args()[1]);
  }
  if (node->is_var()) {
    throw PrologError(ErrorKind::Instantiation,
                      "=../2 called with unbound arguments");
  }
  if (!is_nil(node)) {
    throw PrologError(ErrorKind::Type,
                      debug_string(node) + " is not a proper list in =../2");
  }
  if (items.empty()) {
    throw PrologError(ErrorKind::Domain, "=../2 requires a non-empty list");
  }
  const TermPtr& head = bindings_.deref(items[0]);
  if (head->is_var()) {
    throw PrologError(ErrorKind::Instantiation,
                      "=../2 called with unbound arguments");
  }
  if (items.size() == 1) {
    if (head->is_compound()) {
      throw PrologError(ErrorKind::Type,
                        debug_string(head) + " is not atomic in =../2");
    }
    return unify(term_arg, head, bindings_, occur_check_);
  }
  if (!head->is_const()) {
    throw PrologError(ErrorKind::Type,
                      debug_string(head) + " is not a valid functor");
  }
  std::vector<TermPtr> args(items.begin() + 1, items.end());
  TermPtr built = Term::make_compound(head->name(), std::move(args));
  return unify(term_arg, built, bindings_, occur_check_);
}

void Machine::declare_op_goal(const TermPtr& goal) {
  const TermPtr& p = bindings_.deref(goal->args()[0]);
  const TermPtr& t = bindings_.deref(goal->args()[1]);
  const TermPtr& n = bindings_.deref(goal->args()[2]);
  if (p->is_var() || t->is_var() || n->is_var()) {
    throw PrologError(ErrorKind::Instantiation,
                      "op/3 called with unbound arguments");
  }
  if (!p->is_int()) {
    throw PrologError(ErrorKind::Domain,
                      debug_string(p) + " is not an operator priority");
  }
  if (!t->is_const()) {
    throw PrologError(ErrorKind::Domain,
                      debug_string(t) + " is not an operator type");
  }
  auto type = op_type_from_name(t->name());
  if (!type) {
    throw PrologError(ErrorKind::Domain,
                      "unknown operator type '" + t->name() + "'");
  }
  if (!n->is_const()) {
    throw PrologError(ErrorKind::Type,
                      debug_string(n) + " is not an operator name");
  }
  operators_.declare(static_cast<int>(p->int_value()), *type, n->name());
}

bool Machine::run_builtin(const TermPtr& goal) {
  const std::string& name = goal->name();
  const std::size_t arity = goal->arity();

  if (arity == 0) {
    if (name == "true") return true;
    if (name == "fail") return false;
    // !
    cut_to_barrier();
    return true;
  }

  if (arity == 2) {
    if (name == "=") {
      return unify(goal->args()[0], goal->args()[1], bindings_, occur_check_);
    }
    if (name == ",") {
      goals_ = push_goal(push_goal(goals_, goal->args()[1]), goal->args()[0]);
      return true;
    }
    if (name == ";") {
      solve_disjunction(goal);
      return true;
    }
    if (name == "->") {
      solve_if_then_else(goal->args()[0], goal->args()[1], nullptr, false);
      return true;
    }
    if (name == "is") {
      Number value = eval_gae(goal->args()[1], bindings_);
      return unify(goal->args()[0], number_term(value), bindings_,
                   occur_check_);
    }
    if (name == "<" || name == "=<" || name == ">" || name == ">=" ||
        name == "=:=" || name == "=\\=") {
      Number l = eval_gae(goal->args()[0], bindings_);
      Number r = eval_gae(goal->args()[1], bindings_);
      int c = compare_numbers(l, r);
      if (name == "<") return c < 0;
      if (name == "=<") return c <= 0;
      if (name == ">") return c > 0;
      if (name == ">=") return c >= 0;
      if (name == "=:=") return c == 0;
      return c != 0;
    }
    if (name == "=..") {
      return solve_univ(goal->args()[0], goal->args()[1]);
    }
    // clause
    return solve_clause_lookup(goal->args()[0], goal->args()[1]);
  }

  if (arity == 1) {
    if (name == "not") {
      solve_negation(goal);
      return true;
    }
    // call
    solve_call(goal);
    return true;
  }

  // op/3
  declare_op_goal(goal);
  return true;
}

}  // namespace purelog
