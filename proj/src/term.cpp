#include "purelog/term.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace purelog {

TermPtr Term::make_var(std::int64_t id, std::string name) {
  std::shared_ptr<Term> t(new Term());
  t->tag_ = TermTag::Var;
  t->ground_ = false;
  t->ival_ = id;
  t->text_ = std::move(name);
  return t;
}

TermPtr Term::make_int(std::int64_t value) {
  std::shared_ptr<Term> t(new Term());
  t->tag_ = TermTag::Int;
  t->ival_ = value;
  return t;
}

TermPtr Term::make_float(double value) {
  std::shared_ptr<Term> t(new Term());
  t->tag_ = TermTag::Float;
  t->fval_ = value;
  return t;
}

TermPtr Term::make_const(std::string name) {
  std::shared_ptr<Term> t(new Term());
  t->tag_ = TermTag::Const;
  t->text_ = std::move(name);
  return t;
}

TermPtr Term::make_compound(std::string functor, std::vector<TermPtr> args) {
  if (args.empty()) return make_const(std::move(functor));
  std::shared_ptr<Term> t(new Term());
  t->tag_ = TermTag::Compound;
  t->text_ = std::move(functor);
  t->args_ = std::move(args);
  t->ground_ = std::all_of(t->args_.begin(), t->args_.end(),
                           [](const TermPtr& a) { return a->is_ground(); });
  return t;
}

TermPtr nil_term() {
  static const TermPtr nil = Term::make_const("[]");
  return nil;
}

TermPtr cons(TermPtr head, TermPtr tail) {
  return Term::make_compound(".", {std::move(head), std::move(tail)});
}

bool is_nil(const TermPtr& t) { return t->is_const() && t->name() == "[]"; }

TermPtr make_list(const std::vector<TermPtr>& elems, TermPtr tail) {
  TermPtr list = tail ? std::move(tail) : nil_term();
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
    list = cons(*it, list);
  }
  return list;
}

std::optional<std::vector<TermPtr>> list_elements(const TermPtr& t) {
  std::vector<TermPtr> elems;
  const Term* cur = t.get();
  while (cur->is_compound() && cur->name() == "." && cur->arity() == 2) {
    elems.push_back(cur->args()[0]);
    cur = cur->args()[1].get();
  }
  if (!(cur->is_const() && cur->name() == "[]")) return std::nullopt;
  return elems;
}

bool syntactic_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->tag() != b->tag()) return false;
  switch (a->tag()) {
    case TermTag::Var: return a->var_id() == b->var_id();
    case TermTag::Int: return a->int_value() == b->int_value();
    case TermTag::Float: return a->float_value() == b->float_value();
    case TermTag::Const: return a->name() == b->name();
    case TermTag::Compound: {
      if (a->name() != b->name() || a->arity() != b->arity()) return false;
      for (std::size_t i = 0; i < a->arity(); ++i) {
        if (!syntactic_equal(a->args()[i], b->args()[i])) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

bool renaming_equal(const TermPtr& a, const TermPtr& b,
                    std::unordered_map<std::int64_t, std::int64_t>& fwd,
                    std::unordered_map<std::int64_t, std::int64_t>& rev) {
  if (a->tag() != b->tag()) return false;
  switch (a->tag()) {
    case TermTag::Var: {
      auto f = fwd.find(a->var_id());
      auto r = rev.find(b->var_id());
      if (f == fwd.end() && r == rev.end()) {
        fwd.emplace(a->var_id(), b->var_id());
        rev.emplace(b->var_id(), a->var_id());
        return true;
      }
      return f != fwd.end() && r != rev.end() && f->second == b->var_id() &&
             r->second == a->var_id();
    }
    case TermTag::Int: return a->int_value() == b->int_value();
    case TermTag::Float: return a->float_value() == b->float_value();
    case TermTag::Const: return a->name() == b->name();
    case TermTag::Compound: {
      if (a->name() != b->name() || a->arity() != b->arity()) return false;
      for (std::size_t i = 0; i < a->arity(); ++i) {
        if (!renaming_equal(a->args()[i], b->args()[i], fwd, rev)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool equal_up_to_renaming(const TermPtr& a, const TermPtr& b) {
  std::unordered_map<std::int64_t, std::int64_t> fwd, rev;
  return renaming_equal(a, b, fwd, rev);
}

bool occurs_in(const Term& var, const TermPtr& t) {
  if (t->is_ground()) return false;
  if (t->is_var()) return t->var_id() == var.var_id();
  for (const TermPtr& a : t->args()) {
    if (occurs_in(var, a)) return true;
  }
  return false;
}

std::string debug_string(const TermPtr& t) {
  switch (t->tag()) {
    case TermTag::Var:
      return t->name().empty() ? "_" + std::to_string(t->var_id()) : t->name();
    case TermTag::Int: return std::to_string(t->int_value());
    case TermTag::Float: {
      std::string s = std::to_string(t->float_value());
      return s;
    }
    case TermTag::Const: return t->name();
    case TermTag::Compound: {
      if (t->name() == "." && t->arity() == 2) {
        std::string out = "[" + debug_string(t->args()[0]);
        TermPtr rest = t->args()[1];
        while (rest->is_compound() && rest->name() == "." && rest->arity() == 2) {
          out += "," + debug_string(rest->args()[0]);
          rest = rest->args()[1];
        }
        if (is_nil(rest)) return out + "]";
        return out + "|" + debug_string(rest) + "]";
      }
      std::string out = t->name() + "(";
      for (std::size_t i = 0; i < t->arity(); ++i) {
        if (i) out += ",";
        out += debug_string(t->args()[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

TermPtr VarGen::fresh(std::string name) {
  return Term::make_var(next_++, std::move(name));
}

void Substitution::bind(const TermPtr& var, TermPtr value) {
  if (value->is_var() && value->var_id() == var->var_id()) return;
  for (Pair& p : pairs_) {
    if (p.var->var_id() == var->var_id()) {
      p.value = std::move(value);
      return;
    }
  }
  pairs_.push_back({var, std::move(value)});
}

const TermPtr* Substitution::lookup(const Term& var) const {
  for (const Pair& p : pairs_) {
    if (p.var->var_id() == var.var_id()) return &p.value;
  }
  return nullptr;
}

TermPtr apply_substitution(const TermPtr& t, const Substitution& s) {
  if (t->is_ground() || s.empty()) return t;
  if (t->is_var()) {
    const TermPtr* image = s.lookup(*t);
    return image ? *image : t;
  }
  std::vector<TermPtr> args;
  args.reserve(t->arity());
  bool changed = false;
  for (const TermPtr& a : t->args()) {
    args.push_back(apply_substitution(a, s));
    changed = changed || args.back() != a;
  }
  if (!changed) return t;
  return Term::make_compound(t->name(), std::move(args));
}

Substitution compose(const Substitution& gamma, const Substitution& delta) {
  Substitution out;
  for (const Substitution::Pair& p : gamma.pairs()) {
    out.bind(p.var, apply_substitution(p.value, delta));
  }
  for (const Substitution::Pair& p : delta.pairs()) {
    if (!gamma.contains(*p.var)) out.bind(p.var, p.value);
  }
  return out;
}

void Bindings::undo_to(Mark m) {
  while (trail_.size() > m) {
    trail_.back()->ref_ = nullptr;
    trail_.pop_back();
  }
}

void Bindings::bind(const TermPtr& var, TermPtr value) {
  var->ref_ = std::move(value);
  trail_.push_back(var);
}

const TermPtr& Bindings::deref(const TermPtr& t) const {
  const TermPtr* cur = &t;
  while ((*cur)->is_var() && (*cur)->ref_) {
    cur = &(*cur)->ref_;
  }
  return *cur;
}

namespace {

TermPtr resolve_walk(const Bindings& b, const TermPtr& t,
                     std::vector<std::int64_t>& path) {
  if (t->is_ground()) return t;
  const TermPtr& d = b.deref(t);
  if (d->is_var()) return d;
  if (d->is_ground() || !d->is_compound()) return d;
  if (t->is_var()) {
    // t dereferenced into structure; guard against revisiting it below
    if (std::find(path.begin(), path.end(), t->var_id()) != path.end()) {
      throw PrologError(ErrorKind::Cyclic,
                        "cyclic term through " + debug_string(t));
    }
    path.push_back(t->var_id());
    TermPtr out = resolve_walk(b, d, path);
    path.pop_back();
    return out;
  }
  std::vector<TermPtr> args;
  args.reserve(d->arity());
  bool changed = false;
  for (const TermPtr& a : d->args()) {
    args.push_back(resolve_walk(b, a, path));
    changed = changed || args.back() != a;
  }
  if (!changed) return d;
  return Term::make_compound(d->name(), std::move(args));
}

}  // namespace

TermPtr Bindings::resolve(const TermPtr& t) const {
  std::vector<std::int64_t> path;
  return resolve_walk(*this, t, path);
}

bool Bindings::occurs(const Term& var, const TermPtr& t) const {
  const TermPtr& d = deref(t);
  if (d->is_var()) return d->var_id() == var.var_id();
  if (d->is_ground()) return false;
  for (const TermPtr& a : d->args()) {
    if (occurs(var, a)) return true;
  }
  return false;
}

}  // namespace purelog
