#pragma once

#include <optional>
#include <string>
#include <vector>

#include "purelog/term.hpp"

namespace purelog {

// One equation of a unification problem. `finalized` is set by the solver
// when the occur check is off and the equation must never be selected again.
struct Equation {
  TermPtr lhs;
  TermPtr rhs;
  bool finalized = false;
};

// Multiset of equations; order is insertion order.
using EquationSet = std::vector<Equation>;

enum class UnifyFailure { FunctorClash, OccurCheck, ConstantClash };

const char* to_string(UnifyFailure reason);

struct UnifyOutcome {
  std::optional<Substitution> mgu;
  UnifyFailure reason = UnifyFailure::FunctorClash;

  bool ok() const { return mgu.has_value(); }
  static UnifyOutcome success(Substitution s) { return {std::move(s), {}}; }
  static UnifyOutcome failure(UnifyFailure r) { return {std::nullopt, r}; }
};

// Which applicable equation a nondeterministic step picks. Both strategies
// must reach the same verdict; tests use the pair as a confluence witness.
enum class MMStrategy { FirstApplicable, LastApplicable };

struct MMStep {
  int action = 0;  // 1..6
  bool failed = false;
  UnifyFailure reason = UnifyFailure::FunctorClash;
  EquationSet result;
};

// Applies one rewriting action to the set. Returns nullopt when no action
// applies, i.e. the set is in solved form.
std::optional<MMStep> mm_step(const EquationSet& eqs, bool occur_check = true,
                              MMStrategy strategy = MMStrategy::FirstApplicable);

// Runs mm_step to completion and reads the solved form off as an mgu.
UnifyOutcome mm_solve(EquationSet eqs, bool occur_check = true,
                      MMStrategy strategy = MMStrategy::FirstApplicable);

// Step-by-step rendering, one "action (k): {eq, eq, ...}" line per step.
std::vector<std::string> mm_trace(EquationSet eqs, bool occur_check = true,
                                  MMStrategy strategy = MMStrategy::FirstApplicable);

std::string render_equations(const EquationSet& eqs);

// Destructive unification against a binding store. On failure every binding
// made during the attempt is undone. Variable-variable pairs bind the
// younger (higher id) to the older.
bool unify(const TermPtr& a, const TermPtr& b, Bindings& bindings,
           bool occur_check = false);

}  // namespace purelog
