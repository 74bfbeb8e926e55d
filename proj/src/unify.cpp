#include "purelog/unify.hpp"

#include <cstddef>

namespace purelog {

const char* to_string(UnifyFailure reason) {
  switch (reason) {
    case UnifyFailure::FunctorClash: return "functor clash";
    case UnifyFailure::OccurCheck: return "occur check";
    case UnifyFailure::ConstantClash: return "constant clash";
  }
  return "unknown";
}

namespace {

bool is_atomic(const TermPtr& t) { return !t->is_var() && !t->is_compound(); }

// Same leaf value, so the equation just disappears under action (1).
bool atomic_equal(const TermPtr& a, const TermPtr& b) {
  if (a->tag() != b->tag()) return false;
  if (a->is_int()) return a->int_value() == b->int_value();
  if (a->is_float()) return a->float_value() == b->float_value();
  return a->name() == b->name();
}

bool occurs_elsewhere(const Term& var, const EquationSet& eqs, std::size_t skip) {
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (i == skip) continue;
    if (occurs_in(var, eqs[i].lhs) || occurs_in(var, eqs[i].rhs)) return true;
  }
  return false;
}

struct Applicable {
  std::size_t index;
  int action;
  UnifyFailure reason;
};

std::optional<Applicable> action_at(const EquationSet& eqs, std::size_t i,
                                    bool occur_check) {
  const Equation& eq = eqs[i];
  const TermPtr& l = eq.lhs;
  const TermPtr& r = eq.rhs;
  if (!l->is_var()) {
    if (r->is_var()) return Applicable{i, 4, {}};
    if (l->is_compound() && r->is_compound() && l->name() == r->name() &&
        l->arity() == r->arity()) {
      return Applicable{i, 1, {}};
    }
    if (is_atomic(l) && is_atomic(r)) {
      if (atomic_equal(l, r)) return Applicable{i, 1, {}};
      return Applicable{i, 2, UnifyFailure::ConstantClash};
    }
    return Applicable{i, 2, UnifyFailure::FunctorClash};
  }
  if (r->is_var() && r->var_id() == l->var_id()) return Applicable{i, 3, {}};
  if (eq.finalized) return std::nullopt;
  bool inside = occurs_in(*l, r);
  if (inside && occur_check) return Applicable{i, 6, UnifyFailure::OccurCheck};
  if (occurs_elsewhere(*l, eqs, i)) return Applicable{i, 5, {}};
  return std::nullopt;
}

std::optional<Applicable> select_action(const EquationSet& eqs, bool occur_check,
                                        MMStrategy strategy) {
  if (strategy == MMStrategy::FirstApplicable) {
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (auto a = action_at(eqs, i, occur_check)) return a;
    }
  } else {
    for (std::size_t i = eqs.size(); i-- > 0;) {
      if (auto a = action_at(eqs, i, occur_check)) return a;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MMStep> mm_step(const EquationSet& eqs, bool occur_check,
                              MMStrategy strategy) {
  auto chosen = select_action(eqs, occur_check, strategy);
  if (!chosen) return std::nullopt;

  MMStep step;
  step.action = chosen->action;
  if (chosen->action == 2 || chosen->action == 6) {
    step.failed = true;
    step.reason = chosen->reason;
    return step;
  }

  const std::size_t i = chosen->index;
  EquationSet out;
  out.reserve(eqs.size() + 4);
  switch (chosen->action) {
    case 1: {
      for (std::size_t j = 0; j < eqs.size(); ++j) {
        if (j != i) {
          out.push_back(eqs[j]);
          continue;
        }
        for (std::size_t k = 0; k < eqs[i].lhs->arity(); ++k) {
          out.push_back({eqs[i].lhs->args()[k], eqs[i].rhs->args()[k], false});
        }
      }
      break;
    }
    case 3: {
      for (std::size_t j = 0; j < eqs.size(); ++j) {
        if (j != i) out.push_back(eqs[j]);
      }
      break;
    }
    case 4: {
      out = eqs;
      std::swap(out[i].lhs, out[i].rhs);
      break;
    }
    case 5: {
      Substitution single;
      single.bind(eqs[i].lhs, eqs[i].rhs);
      out = eqs;
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (j == i) continue;
        out[j].lhs = apply_substitution(out[j].lhs, single);
        out[j].rhs = apply_substitution(out[j].rhs, single);
      }
      out[i].finalized = true;
      break;
    }
  }
  step.result = std::move(out);
  return step;
}

UnifyOutcome mm_solve(EquationSet eqs, bool occur_check, MMStrategy strategy) {
  for (;;) {
    auto step = mm_step(eqs, occur_check, strategy);
    if (!step) break;
    if (step->failed) return UnifyOutcome::failure(step->reason);
    eqs = std::move(step->result);
  }
  Substitution mgu;
  for (const Equation& eq : eqs) {
    mgu.bind(eq.lhs, eq.rhs);
  }
  return UnifyOutcome::success(std::move(mgu));
}

std::string render_equations(const EquationSet& eqs) {
  std::string out = "{";
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (i) out += ", ";
    out += debug_string(eqs[i].lhs) + " = " + debug_string(eqs[i].rhs);
  }
  return out + "}";
}

std::vector<std::string> mm_trace(EquationSet eqs, bool occur_check,
                                  MMStrategy strategy) {
  std::vector<std::string> lines;
  for (;;) {
    auto step = mm_step(eqs, occur_check, strategy);
    if (!step) break;
    std::string line = "action (" + std::to_string(step->action) + "): ";
    if (step->failed) {
      lines.push_back(line + "failure (" + to_string(step->reason) + ")");
      break;
    }
    lines.push_back(line + render_equations(step->result));
    eqs = std::move(step->result);
  }
  return lines;
}

namespace {

bool unify_walk(const TermPtr& a0, const TermPtr& b0, Bindings& bindings,
                bool occur_check) {
  const TermPtr& a = bindings.deref(a0);
  const TermPtr& b = bindings.deref(b0);
  if (a.get() == b.get()) return true;
  if (a->is_var() && b->is_var()) {
    if (a->var_id() == b->var_id()) return true;
    if (a->var_id() < b->var_id()) {
      bindings.bind(b, a);
    } else {
      bindings.bind(a, b);
    }
    return true;
  }
  if (a->is_var()) {
    if (occur_check && bindings.occurs(*a, b)) return false;
    bindings.bind(a, b);
    return true;
  }
  if (b->is_var()) {
    if (occur_check && bindings.occurs(*b, a)) return false;
    bindings.bind(b, a);
    return true;
  }
  if (a->tag() != b->tag()) return false;
  switch (a->tag()) {
    case TermTag::Int: return a->int_value() == b->int_value();
    case TermTag::Float: return a->float_value() == b->float_value();
    case TermTag::Const: return a->name() == b->name();
    case TermTag::Compound: {
      if (a->name() != b->name() || a->arity() != b->arity()) return false;
      for (std::size_t i = 0; i < a->arity(); ++i) {
        if (!unify_walk(a->args()[i], b->args()[i], bindings, occur_check)) {
          return false;
        }
      }
      return true;
    }
    default: return false;
  }
}

}  // namespace

bool unify(const TermPtr& a, const TermPtr& b, Bindings& bindings,
           bool occur_check) {
  const Bindings::Mark mark = bindings.mark();
  if (unify_walk(a, b, bindings, occur_check)) return true;
  bindings.undo_to(mark);
  return false;
}

}  // namespace purelog
