#include "purelog/engine.hpp"

#include <cassert>
#include <fstream>
#include <sstream>

#include "purelog/builtins.hpp"
#include "purelog/unify.hpp"
#include "purelog/writer.hpp"

namespace purelog {

namespace {

std::string procedure_indicator(const TermPtr& t) {
  return t->name() + "/" + std::to_string(t->arity());
}

std::string location(const std::string& origin, SourcePos pos) {
  std::string out;
  if (!origin.empty()) out += origin + ":";
  out += std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
  return out;
}

}  // namespace

std::string Database::key(const std::string& name, std::size_t arity) {
  return name + "/" + std::to_string(arity);
}

std::shared_ptr<const Database::ClauseList> Database::find(
    const std::string& name, std::size_t arity) const {
  auto it = defs_.find(key(name, arity));
  if (it == defs_.end()) return nullptr;
  return it->second;
}

bool Database::defined(const std::string& name, std::size_t arity) const {
  return defs_.find(key(name, arity)) != defs_.end();
}

void Database::add(Clause clause) {
  const std::string k = key(clause.head->name(), clause.head->arity());
  auto it = defs_.find(k);
  if (it == defs_.end()) {
    it = defs_.emplace(k, std::make_shared<ClauseList>()).first;
  }
  it->second->push_back(std::move(clause));
}

std::size_t Database::clause_count() const {
  std::size_t n = 0;
  for (const auto& [k, list] : defs_) n += list->size();
  return n;
}

const TermPtr* Solution::find(std::string_view name) const {
  for (const auto& [n, value] : bindings) {
    if (n == name) return &value;
  }
  return nullptr;
}

Machine::Machine(MachineOptions options)
    : occur_check_(options.occur_check), step_limit_(options.step_limit) {}

Machine::GoalList Machine::push_goal(GoalList list, TermPtr call) {
  auto node = std::make_shared<GoalNode>();
  node->call = std::move(call);
  node->next = std::move(list);
  return node;
}

Machine::GoalList Machine::push_barrier(GoalList list, std::size_t height) {
  auto node = std::make_shared<GoalNode>();
  node->barrier = height;
  node->next = std::move(list);
  return node;
}

TermPtr Machine::rename_term(
    const TermPtr& t, std::vector<std::pair<std::int64_t, TermPtr>>& map) {
  if (t->is_ground()) return t;
  if (t->is_var()) {
    for (const auto& [id, fresh] : map) {
      if (id == t->var_id()) return fresh;
    }
    TermPtr fresh = vars_.fresh(t->name());
    map.emplace_back(t->var_id(), fresh);
    return fresh;
  }
  std::vector<TermPtr> args;
  args.reserve(t->arity());
  for (const TermPtr& a : t->args()) args.push_back(rename_term(a, map));
  return Term::make_compound(t->name(), std::move(args));
}

Clause Machine::rename_clause(const Clause& clause, bool with_body_term) {
  std::vector<std::pair<std::int64_t, TermPtr>> map;
  Clause out;
  out.head = rename_term(clause.head, map);
  if (with_body_term) {
    out.body_term = rename_term(clause.body_term, map);
  } else {
    out.body.reserve(clause.body.size());
    for (const TermPtr& g : clause.body) out.body.push_back(rename_term(g, map));
  }
  return out;
}

void Machine::cut_to_barrier() {
  for (const GoalNode* node = goals_.get(); node; node = node->next.get()) {
    if (!node->call) {
      if (cps_.size() > node->barrier) {
        cps_.erase(cps_.begin() + static_cast<std::ptrdiff_t>(node->barrier),
                   cps_.end());
      }
      return;
    }
  }
  cps_.clear();
}

void Machine::dispatch_user_call(const TermPtr& goal) {
  auto clauses = database_.find(goal->name(), goal->arity());
  if (!clauses) {
    throw PrologError(ErrorKind::Existence, "procedure " +
                                                procedure_indicator(goal) +
                                                " is not defined");
  }
  cps_.push_back({goals_, bindings_.mark(),
                  ClauseAlternatives{goal, std::move(clauses), 0}});
}

bool Machine::run() {
  for (;;) {
    if (!goals_) return true;
    const GoalNode* node = goals_.get();
    TermPtr call = node->call;
    goals_ = node->next;
    if (!call) continue;

    ++steps_;
    if (step_limit_ && steps_ > *step_limit_) {
      throw PrologError(ErrorKind::Resource,
                        "step limit " + std::to_string(*step_limit_) +
                            " exceeded");
    }

    const TermPtr& goal = bindings_.deref(call);
    if (goal->is_var()) {
      throw PrologError(ErrorKind::Instantiation, "goal is an unbound variable");
    }
    if (goal->is_number()) {
      throw PrologError(ErrorKind::Type,
                        debug_string(goal) + " is not a callable goal");
    }

    if (is_builtin(goal->name(), goal->arity())) {
      if (!run_builtin(goal)) {
        if (!backtrack()) return false;
      }
      continue;
    }

    dispatch_user_call(goal);
    if (!backtrack()) return false;
  }
}

bool Machine::backtrack() {
  while (!cps_.empty()) {
    ChoicePoint& cp = cps_.back();
    bindings_.undo_to(cp.mark);

    if (auto* ca = std::get_if<ClauseAlternatives>(&cp.resume)) {
      const std::size_t h0 = cps_.size() - 1;
      while (ca->next < ca->clauses->size()) {
        const Clause& base = (*ca->clauses)[ca->next++];
        Clause instance = rename_clause(base, false);
        bool ok;
        if (observer_) {
          TermPtr snapshot = bindings_.resolve(ca->call);
          ok = unify(ca->call, instance.head, bindings_, occur_check_);
          observer_(snapshot, instance.head, ok);
        } else {
          ok = unify(ca->call, instance.head, bindings_, occur_check_);
        }
        if (ok) {
          GoalList g = push_barrier(cp.goals, h0);
          for (auto it = instance.body.rbegin(); it != instance.body.rend();
               ++it) {
            g = push_goal(g, *it);
          }
          const bool exhausted = ca->next >= ca->clauses->size();
          goals_ = std::move(g);
          if (exhausted) cps_.pop_back();
          return true;
        }
        bindings_.undo_to(cp.mark);
      }
      cps_.pop_back();
      continue;
    }

    if (std::get_if<GoalAlternative>(&cp.resume)) {
      goals_ = cp.goals;
      cps_.pop_back();
      return true;
    }

    auto& ce = std::get<ClauseEnumeration>(cp.resume);
    while (ce.next < ce.clauses->size()) {
      const Clause& base = (*ce.clauses)[ce.next++];
      Clause instance = rename_clause(base, true);
      if (unify(ce.head, instance.head, bindings_, occur_check_) &&
          unify(ce.body, instance.body_term, bindings_, occur_check_)) {
        goals_ = cp.goals;
        if (ce.next >= ce.clauses->size()) cps_.pop_back();
        return true;
      }
      bindings_.undo_to(cp.mark);
    }
    cps_.pop_back();
  }
  return false;
}

ConsultReport Machine::consult(std::string_view text, const std::string& origin) {
  ProgramParse parsed = parse_program(text, operators_, vars_);
  ConsultReport report;
  for (const std::string& e : parsed.errors) {
    report.errors.push_back(origin.empty() ? e : origin + ":" + e);
  }
  for (const ParsedClause& clause : parsed.clauses) {
    if (clause.kind == ParsedClause::Kind::Directive) {
      run_directive(clause, report, origin);
      continue;
    }
    if (is_builtin(clause.head->name(), clause.head->arity())) {
      report.errors.push_back(location(origin, clause.pos) +
                              "cannot redefine built-in " +
                              procedure_indicator(clause.head));
      continue;
    }
    database_.add({clause.head, clause.body, clause.body_term});
    ++report.clauses_added;
  }
  return report;
}

void Machine::run_directive(const ParsedClause& clause, ConsultReport& report,
                            const std::string& origin) {
  ParsedQuery query;
  query.goal_term = clause.goal;
  query.goals = flatten_conjunction(clause.goal);
  try {
    Query q = solve_parsed(query);
    if (!q.next()) {
      report.warnings.push_back(location(origin, clause.pos) +
                                "directive failed: " +
                                write_term(clause.goal, operators_));
    }
  } catch (const PrologError& e) {
    report.warnings.push_back(location(origin, clause.pos) +
                              "directive error: " + e.what());
  }
}

ConsultReport Machine::consult_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw PrologError(ErrorKind::Io, "cannot read file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return consult(buffer.str(), path);
}

Query Machine::solve(std::string_view query_text) {
  return solve_parsed(parse_query(query_text, operators_, vars_));
}

Query Machine::solve_parsed(const ParsedQuery& query) {
  assert(!query_active_ && cps_.empty());
  query_active_ = true;
  steps_ = 0;
  const Bindings::Mark mark = bindings_.mark();
  GoalList g = push_barrier(nullptr, 0);
  for (auto it = query.goals.rbegin(); it != query.goals.rend(); ++it) {
    g = push_goal(g, *it);
  }
  goals_ = std::move(g);
  return Query(*this, mark, query.named_vars);
}

void Machine::end_query(Bindings::Mark mark) {
  cps_.clear();
  goals_ = nullptr;
  bindings_.undo_to(mark);
  query_active_ = false;
}

Query::Query(Machine& machine, Bindings::Mark mark,
             std::vector<std::pair<std::string, TermPtr>> named_vars)
    : machine_(&machine), mark_(mark), named_vars_(std::move(named_vars)) {}

Query::Query(Query&& other) noexcept
    : machine_(other.machine_),
      mark_(other.mark_),
      started_(other.started_),
      done_(other.done_),
      named_vars_(std::move(other.named_vars_)) {
  other.machine_ = nullptr;
  other.done_ = true;
}

Query::~Query() { close(); }

void Query::close() {
  if (!machine_ || done_) return;
  done_ = true;
  machine_->end_query(mark_);
}

std::optional<Solution> Query::next() {
  if (!machine_ || done_) return std::nullopt;
  try {
    bool found;
    if (!started_) {
      started_ = true;
      found = machine_->run();
    } else {
      found = machine_->backtrack() && machine_->run();
    }
    if (!found) {
      close();
      return std::nullopt;
    }
    Solution solution;
    for (const auto& [name, var] : named_vars_) {
      solution.bindings.emplace_back(name, machine_->bindings().resolve(var));
    }
    return solution;
  } catch (...) {
    close();
    throw;
  }
}

}  // namespace purelog
