#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "purelog/errors.hpp"

namespace purelog {

enum class TermTag { Var, Int, Float, Const, Compound };

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term node. Variables carry a mutable binding slot that only
// Bindings may touch; everything else is frozen at construction.
class Term {
public:
  static TermPtr make_var(std::int64_t id, std::string name);
  static TermPtr make_int(std::int64_t value);
  static TermPtr make_float(double value);
  static TermPtr make_const(std::string name);
  static TermPtr make_compound(std::string functor, std::vector<TermPtr> args);

  TermTag tag() const { return tag_; }
  bool is_var() const { return tag_ == TermTag::Var; }
  bool is_int() const { return tag_ == TermTag::Int; }
  bool is_float() const { return tag_ == TermTag::Float; }
  bool is_number() const { return is_int() || is_float(); }
  bool is_const() const { return tag_ == TermTag::Const; }
  bool is_compound() const { return tag_ == TermTag::Compound; }
  bool is_callable() const { return is_const() || is_compound(); }

  // True when no variable occurs anywhere below this node.
  bool is_ground() const { return ground_; }

  std::int64_t var_id() const { return ival_; }
  std::int64_t int_value() const { return ival_; }
  double float_value() const { return fval_; }

  // Variable print name, constant name, or compound functor.
  const std::string& name() const { return text_; }

  const std::vector<TermPtr>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

private:
  friend class Bindings;

  Term() = default;

  TermTag tag_ = TermTag::Const;
  bool ground_ = true;
  std::int64_t ival_ = 0;
  double fval_ = 0.0;
  std::string text_;
  std::vector<TermPtr> args_;
  mutable TermPtr ref_;  // variable binding slot, null when unbound
};

// List helpers over the '.'/2 + '[]' encoding.
TermPtr nil_term();
TermPtr cons(TermPtr head, TermPtr tail);
bool is_nil(const TermPtr& t);
TermPtr make_list(const std::vector<TermPtr>& elems, TermPtr tail = nullptr);
// Elements of a proper list, or nullopt for partial/improper lists.
std::optional<std::vector<TermPtr>> list_elements(const TermPtr& t);

bool syntactic_equal(const TermPtr& a, const TermPtr& b);
// Equality modulo a bijective renaming of variables.
bool equal_up_to_renaming(const TermPtr& a, const TermPtr& b);
// Occurrence over the plain term structure, ignoring bindings.
bool occurs_in(const Term& var, const TermPtr& t);

// Functional-notation rendering for error details and diagnostics: lists in
// bracket sugar, everything else as name(args), variables by print name.
std::string debug_string(const TermPtr& t);

// Source of fresh variables. Identity is the numeric id; the name is kept
// only for display.
class VarGen {
public:
  TermPtr fresh(std::string name = "");
  std::int64_t issued() const { return next_; }

private:
  std::int64_t next_ = 0;
};

// Finite map from variables to terms, domain keyed by variable id.
// Invariants: no variable maps to itself; domain entries are distinct.
class Substitution {
public:
  // Records var -> value, silently dropping x/x pairs.
  void bind(const TermPtr& var, TermPtr value);
  const TermPtr* lookup(const Term& var) const;
  bool contains(const Term& var) const { return lookup(var) != nullptr; }

  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  struct Pair {
    TermPtr var;
    TermPtr value;
  };
  const std::vector<Pair>& pairs() const { return pairs_; }

private:
  std::vector<Pair> pairs_;
};

// Simultaneous application: image subterms are not rewritten again.
TermPtr apply_substitution(const TermPtr& t, const Substitution& s);

// gamma composed with delta: apply delta to gamma's images, then append
// delta's pairs whose domain variable is not already bound by gamma.
Substitution compose(const Substitution& gamma, const Substitution& delta);

// Destructive binding store with a trail for backtracking.
class Bindings {
public:
  using Mark = std::size_t;

  Mark mark() const { return trail_.size(); }
  void undo_to(Mark m);

  bool is_bound(const Term& var) const { return var.ref_ != nullptr; }
  // var must be an unbound variable; the binding is trailed.
  void bind(const TermPtr& var, TermPtr value);

  // Follows bound-variable chains; stops at an unbound var or non-var.
  const TermPtr& deref(const TermPtr& t) const;

  // Fully substitutes bindings into t. Unchanged subterms are shared.
  // Throws ErrorKind::Cyclic when a variable is revisited on the walk.
  TermPtr resolve(const TermPtr& t) const;

  // Occurrence check through bindings.
  bool occurs(const Term& var, const TermPtr& t) const;

private:
  std::vector<TermPtr> trail_;  // bound variable cells, oldest first
};

inline bool occurs_in(const Term& var, const TermPtr& t, const Bindings& b) {
  return b.occurs(var, t);
}

}  // namespace purelog
