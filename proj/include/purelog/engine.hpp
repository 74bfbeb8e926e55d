#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "purelog/ops.hpp"
#include "purelog/parser.hpp"
#include "purelog/term.hpp"

namespace purelog {

struct Clause {
  TermPtr head;
  std::vector<TermPtr> body;  // flattened conjunction, empty for facts
  TermPtr body_term;          // 'true' for facts
};

// Clauses grouped by name/arity, kept in consult order.
class Database {
public:
  using ClauseList = std::vector<Clause>;

  std::shared_ptr<const ClauseList> find(const std::string& name,
                                         std::size_t arity) const;
  bool defined(const std::string& name, std::size_t arity) const;
  void add(Clause clause);
  std::size_t clause_count() const;

private:
  std::unordered_map<std::string, std::shared_ptr<ClauseList>> defs_;
  static std::string key(const std::string& name, std::size_t arity);
};

struct Solution {
  // named query variables in first-occurrence order, fully resolved
  std::vector<std::pair<std::string, TermPtr>> bindings;

  const TermPtr* find(std::string_view name) const;
};

struct ConsultReport {
  std::size_t clauses_added = 0;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

struct MachineOptions {
  bool occur_check = false;
  std::optional<std::uint64_t> step_limit;
};

class Machine;

// One running query. Solutions stream out of next(); the destructor undoes
// every binding the query made, so the machine is left clean.
class Query {
public:
  Query(Query&& other) noexcept;
  Query& operator=(Query&&) = delete;
  Query(const Query&) = delete;
  ~Query();

  // nullopt when the search space is exhausted; errors propagate as
  // PrologError after the query has been wound down.
  std::optional<Solution> next();
  void close();

private:
  friend class Machine;
  Query(Machine& machine, Bindings::Mark mark,
        std::vector<std::pair<std::string, TermPtr>> named_vars);

  Machine* machine_ = nullptr;
  Bindings::Mark mark_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::pair<std::string, TermPtr>> named_vars_;
};

class Machine {
public:
  explicit Machine(MachineOptions options = {});

  OperatorTable& operators() { return operators_; }
  const OperatorTable& operators() const { return operators_; }
  Database& database() { return database_; }
  const Database& database() const { return database_; }
  Bindings& bindings() { return bindings_; }
  VarGen& vars() { return vars_; }

  bool occur_check() const { return occur_check_; }
  void set_occur_check(bool on) { occur_check_ = on; }
  void set_step_limit(std::optional<std::uint64_t> limit) { step_limit_ = limit; }
  std::uint64_t steps_taken() const { return steps_; }

  ConsultReport consult(std::string_view text, const std::string& origin = "");
  ConsultReport consult_file(const std::string& path);

  Query solve(std::string_view query_text);
  Query solve_parsed(const ParsedQuery& query);

  // Called on every clause-head unification attempt with the goal as it
  // stood before the attempt, the fresh clause head, and the verdict.
  using UnifyObserver =
      std::function<void(const TermPtr& goal, const TermPtr& head, bool ok)>;
  void set_unify_observer(UnifyObserver observer) {
    observer_ = std::move(observer);
  }

private:
  friend class Query;

  struct GoalNode {
    TermPtr call;  // null marks a cut barrier
    std::size_t barrier = 0;
    std::shared_ptr<const GoalNode> next;
  };
  using GoalList = std::shared_ptr<const GoalNode>;

  struct ClauseAlternatives {
    TermPtr call;
    std::shared_ptr<const Database::ClauseList> clauses;
    std::size_t next = 0;
  };
  struct GoalAlternative {};  // continuation lives in ChoicePoint::goals
  struct ClauseEnumeration {
    TermPtr head;
    TermPtr body;
    std::shared_ptr<const Database::ClauseList> clauses;
    std::size_t next = 0;
  };

  struct ChoicePoint {
    GoalList goals;
    Bindings::Mark mark;
    std::variant<ClauseAlternatives, GoalAlternative, ClauseEnumeration> resume;
  };

  static GoalList push_goal(GoalList list, TermPtr call);
  static GoalList push_barrier(GoalList list, std::size_t height);

  bool run();
  bool backtrack();
  void cut_to_barrier();
  void dispatch_user_call(const TermPtr& goal);
  Clause rename_clause(const Clause& clause, bool with_body_term);
  TermPtr rename_term(const TermPtr& t,
                      std::vector<std::pair<std::int64_t, TermPtr>>& map);
  void run_directive(const ParsedClause& clause, ConsultReport& report,
                     const std::string& origin);
  void end_query(Bindings::Mark mark);

  // defined in builtins.cpp
  bool run_builtin(const TermPtr& goal);
  void solve_disjunction(const TermPtr& goal);
  void solve_if_then_else(TermPtr cond, TermPtr then_goal, TermPtr else_goal,
                          bool has_else);
  void solve_negation(const TermPtr& goal);
  void solve_call(const TermPtr& goal);
  bool solve_clause_lookup(const TermPtr& head_arg, const TermPtr& body_arg);
  bool solve_univ(const TermPtr& term_arg, const TermPtr& list_arg);
  void declare_op_goal(const TermPtr& goal);

  OperatorTable operators_ = OperatorTable::defaults();
  Database database_;
  Bindings bindings_;
  VarGen vars_;
  bool occur_check_ = false;
  std::optional<std::uint64_t> step_limit_;
  std::uint64_t steps_ = 0;

  GoalList goals_;
  std::vector<ChoicePoint> cps_;
  bool query_active_ = false;
  UnifyObserver observer_;
};

}  // namespace purelog
