#pragma once

// Shared by the test binaries: corpus access, query driving, seed-pinned
// random generators, and the randomized property suites.

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "purelog/builtins.hpp"
#include "purelog/engine.hpp"
#include "purelog/parser.hpp"
#include "purelog/repl.hpp"
#include "purelog/term.hpp"
#include "purelog/unify.hpp"
#include "purelog/writer.hpp"

namespace purelog::test {

inline std::string corpus_path(const std::string& file) {
  const char* dir = std::getenv("PURELOG_CORPUS");
  std::string base = (dir && *dir) ? dir : "corpus";
  return base + "/" + file;
}

inline void load_text(Machine& m, std::string_view text) {
  ConsultReport r = m.consult(text);
  if (!r.ok()) throw std::runtime_error("consult failed: " + r.errors.front());
}

inline void load_corpus(Machine& m, std::initializer_list<const char*> files) {
  for (const char* f : files) {
    ConsultReport r = m.consult_file(corpus_path(f));
    if (!r.ok()) throw std::runtime_error("consult failed: " + r.errors.front());
  }
}

inline std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += ", ";
    out += lines[i];
  }
  return out;
}

// Every solution rendered as its "Name = value" lines joined with ", ";
// an answer that binds nothing renders as "yes".
inline std::vector<std::string> query_all(Machine& m, const std::string& text,
                                          std::size_t limit = 4096) {
  std::vector<std::string> out;
  Query q = m.solve(text);
  while (out.size() < limit) {
    std::optional<Solution> s = q.next();
    if (!s) break;
    std::vector<std::string> lines = solution_lines(*s, m.operators());
    out.push_back(lines.empty() ? std::string("yes") : join_lines(lines));
  }
  return out;
}

inline std::optional<std::string> query_first(Machine& m,
                                              const std::string& text) {
  Query q = m.solve(text);
  std::optional<Solution> s = q.next();
  if (!s) return std::nullopt;
  std::vector<std::string> lines = solution_lines(*s, m.operators());
  q.close();
  return lines.empty() ? std::string("yes") : join_lines(lines);
}

inline bool succeeds(Machine& m, const std::string& text) {
  Query q = m.solve(text);
  return q.next().has_value();
}

// Kind of the error the query raises, nullopt when it runs to exhaustion.
inline std::optional<ErrorKind> error_kind(Machine& m,
                                           const std::string& text) {
  try {
    Query q = m.solve(text);
    while (q.next()) {
    }
  } catch (const PrologError& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::optional<std::vector<std::int64_t>> term_ints(const TermPtr& t) {
  auto elems = list_elements(t);
  if (!elems) return std::nullopt;
  std::vector<std::int64_t> out;
  for (const TermPtr& e : *elems) {
    if (!e->is_int()) return std::nullopt;
    out.push_back(e->int_value());
  }
  return out;
}

// mt19937_64 has a standard-mandated sequence, so modulo draws keep the
// suites reproducible across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }
  bool chance(int percent) { return below(100) < percent; }

private:
  std::mt19937_64 gen_;
};

class TermGen {
public:
  TermGen(std::uint64_t seed, VarGen& vars, int pool_size = 5) : rng_(seed) {
    for (int i = 0; i < pool_size; ++i) {
      pool_.push_back(vars.fresh("V" + std::to_string(i)));
    }
  }

  Rng& rng() { return rng_; }
  const std::vector<TermPtr>& pool() const { return pool_; }
  TermPtr pool_var() { return pool_[rng_.below(static_cast<int>(pool_.size()))]; }

  TermPtr leaf(bool with_vars = true) {
    switch (rng_.below(with_vars ? 6 : 4)) {
      case 0:
        return Term::make_int(rng_.below(19) - 9);
      case 1:
        return Term::make_const("a");
      case 2:
        return Term::make_const("b");
      case 3:
        return Term::make_const("c");
      default:
        return pool_var();
    }
  }

  TermPtr term(int depth, bool with_vars = true) {
    if (depth <= 0 || rng_.below(3) == 0) return leaf(with_vars);
    switch (rng_.below(5)) {
      case 0:
        return Term::make_compound("f", {term(depth - 1, with_vars)});
      case 1:
        return Term::make_compound(
            "f", {term(depth - 1, with_vars), term(depth - 1, with_vars)});
      case 2:
        return Term::make_compound("g", {term(depth - 1, with_vars)});
      case 3:
        return Term::make_compound(
            "h", {term(depth - 1, with_vars), term(depth - 1, with_vars),
                  term(depth - 1, with_vars)});
      default:
        return cons(term(depth - 1, with_vars), term(depth - 1, with_vars));
    }
  }

  TermPtr ground(int depth) { return term(depth, false); }

  Substitution substitution(int max_pairs, int depth) {
    Substitution s;
    int n = rng_.below(max_pairs + 1);
    for (int i = 0; i < n; ++i) {
      s.bind(pool_var(), term(depth));
    }
    return s;
  }

private:
  Rng rng_;
  std::vector<TermPtr> pool_;
};

// Terms that exercise the writer: operators at several priorities, quoted
// atoms, floats, negative numbers, lists.
inline TermPtr op_term(TermGen& g, int depth) {
  Rng& rng = g.rng();
  if (depth <= 0 || rng.below(4) == 0) {
    switch (rng.below(11)) {
      case 0:
        return Term::make_int(rng.below(41) - 20);
      case 1:
        return Term::make_float((rng.below(801) - 400) / 8.0);
      case 2:
        return Term::make_const("hello world");
      case 3:
        return Term::make_const("don't");
      case 4:
        return Term::make_const("abc_1");
      case 5:
        return nil_term();
      case 6:
        return Term::make_const("a");
      case 7:
        return Term::make_const("-");
      case 8:
        return Term::make_const("not");
      default:
        return g.pool_var();
    }
  }
  switch (rng.below(12)) {
    case 0:
      return Term::make_compound("+", {op_term(g, depth - 1), op_term(g, depth - 1)});
    case 1:
      return Term::make_compound("-", {op_term(g, depth - 1), op_term(g, depth - 1)});
    case 2:
      return Term::make_compound("*", {op_term(g, depth - 1), op_term(g, depth - 1)});
    case 3:
      return Term::make_compound("//", {op_term(g, depth - 1), op_term(g, depth - 1)});
    case 4:
      return Term::make_compound(";", {op_term(g, depth - 1), op_term(g, depth - 1)});
    case 5:
      return Term::make_compound("->", {op_term(g, depth - 1), op_term(g, depth - 1)});
    case 6:
      return Term::make_compound("=", {op_term(g, depth - 1), op_term(g, depth - 1)});
    case 7:
      return Term::make_compound("<", {op_term(g, depth - 1), op_term(g, depth - 1)});
    case 8:
      return Term::make_compound("-", {op_term(g, depth - 1)});
    case 9:
      return Term::make_compound("not", {op_term(g, depth - 1)});
    case 10:
      return Term::make_compound("f", {op_term(g, depth - 1), op_term(g, depth - 1)});
    default:
      return cons(op_term(g, depth - 1), op_term(g, depth - 1));
  }
}

// ---- randomized property suites -----------------------------------------
// Each returns nullopt on success or a description of the first failure.
// Both the doctest suite and the acceptance runner call these with the same
// pinned seeds.

inline std::optional<std::string> prop_mm_engine_agreement(std::uint64_t seed,
                                                           int cases) {
  VarGen vars;
  TermGen gen(seed, vars);
  Bindings b;
  for (int i = 0; i < cases; ++i) {
    TermPtr s = gen.term(3);
    TermPtr t = gen.term(3);
    UnifyOutcome first = mm_solve({{s, t, false}}, true, MMStrategy::FirstApplicable);
    UnifyOutcome last = mm_solve({{s, t, false}}, true, MMStrategy::LastApplicable);
    bool engine_ok = unify(s, t, b, true);
    std::string where = "case " + std::to_string(i) + ": " + debug_string(s) +
                        " = " + debug_string(t);
    if (first.ok() != engine_ok || last.ok() != engine_ok) {
      b.undo_to(0);
      return "solver verdicts disagree on " + where;
    }
    if (engine_ok) {
      TermPtr ms = apply_substitution(s, *first.mgu);
      TermPtr mt = apply_substitution(t, *first.mgu);
      if (!syntactic_equal(ms, mt)) {
        b.undo_to(0);
        return "equation solver result is not a unifier on " + where;
      }
      TermPtr es = b.resolve(s);
      if (!equal_up_to_renaming(es, ms)) {
        b.undo_to(0);
        return "unified instances differ on " + where;
      }
    }
    b.undo_to(0);
  }
  return std::nullopt;
}

inline std::optional<std::string> prop_compose_law(std::uint64_t seed,
                                                   int cases) {
  VarGen vars;
  TermGen gen(seed, vars, 6);
  for (int i = 0; i < cases; ++i) {
    TermPtr t = gen.term(3);
    Substitution gamma = gen.substitution(4, 2);
    Substitution delta = gen.substitution(4, 2);
    TermPtr lhs = apply_substitution(apply_substitution(t, gamma), delta);
    TermPtr rhs = apply_substitution(t, compose(gamma, delta));
    if (!syntactic_equal(lhs, rhs)) {
      return "composition law fails on case " + std::to_string(i) + ": " +
             debug_string(t) + " gives " + debug_string(lhs) + " vs " +
             debug_string(rhs);
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> prop_trail_purity(std::uint64_t seed,
                                                    int cases) {
  VarGen vars;
  TermGen gen(seed, vars);
  Bindings b;
  int failures_seen = 0;
  for (int i = 0; i < cases; ++i) {
    if (gen.rng().chance(40)) {
      const TermPtr& v = gen.pool_var();
      if (!b.is_bound(*v)) b.bind(v, gen.ground(2));
    }
    Bindings::Mark before = b.mark();
    std::vector<std::string> snapshot;
    for (const TermPtr& v : gen.pool()) {
      snapshot.push_back(debug_string(b.resolve(v)));
    }
    TermPtr s = gen.term(3);
    TermPtr t = gen.term(3);
    bool ok = unify(s, t, b, gen.rng().chance(50));
    if (!ok) {
      ++failures_seen;
      if (b.mark() != before) {
        b.undo_to(0);
        return "failed unification left trail entries on case " +
               std::to_string(i);
      }
      for (std::size_t j = 0; j < gen.pool().size(); ++j) {
        if (debug_string(b.resolve(gen.pool()[j])) != snapshot[j]) {
          b.undo_to(0);
          return "failed unification changed a binding on case " +
                 std::to_string(i);
        }
      }
    } else {
      b.undo_to(before);
      for (std::size_t j = 0; j < gen.pool().size(); ++j) {
        if (debug_string(b.resolve(gen.pool()[j])) != snapshot[j]) {
          b.undo_to(0);
          return "undo did not restore a binding on case " + std::to_string(i);
        }
      }
    }
    if (gen.rng().chance(25)) b.undo_to(0);
  }
  b.undo_to(0);
  if (failures_seen < cases / 5) {
    return "generator produced too few failing unifications: " +
           std::to_string(failures_seen);
  }
  return std::nullopt;
}

inline std::optional<std::string> prop_roundtrip(std::uint64_t seed,
                                                 int cases) {
  OperatorTable table = OperatorTable::defaults();
  VarGen vars;
  TermGen gen(seed, vars);
  for (int i = 0; i < cases; ++i) {
    TermPtr t = op_term(gen, 4);
    std::string text = write_term(t, table);
    VarGen fresh;
    TermPtr back;
    try {
      back = parse_term_text(text, table, fresh);
    } catch (const PrologError& e) {
      return "case " + std::to_string(i) + ": '" + text +
             "' does not parse back: " + e.what();
    }
    if (!equal_up_to_renaming(t, back)) {
      return "case " + std::to_string(i) + ": '" + text +
             "' reads back as a different term: " + debug_string(back);
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> prop_meta_interpreter(std::uint64_t seed,
                                                        int cases) {
  Machine m;
  load_corpus(m, {"append.pl", "member.pl", "sublist.pl", "solve.pl"});
  Rng rng(seed);
  const char* atoms[] = {"a", "b", "c"};
  auto random_list = [&](int max_len) {
    int n = rng.below(max_len + 1);
    std::string out = "[";
    for (int i = 0; i < n; ++i) {
      if (i) out += ",";
      out += atoms[rng.below(3)];
    }
    return out + "]";
  };
  for (int i = 0; i < cases; ++i) {
    std::string goal;
    switch (rng.below(5)) {
      case 0:
        goal = "member(X, " + random_list(5) + ")";
        break;
      case 1:
        goal = "member(" + std::string(atoms[rng.below(3)]) + ", " +
               random_list(5) + ")";
        break;
      case 2:
        goal = "append(Xs, Ys, " + random_list(5) + ")";
        break;
      case 3:
        goal = "append(" + random_list(3) + ", " + random_list(3) + ", Zs)";
        break;
      default:
        goal = "sublist(Xs, " + random_list(3) + ")";
        break;
    }
    std::vector<std::string> direct = query_all(m, goal + ".");
    std::vector<std::string> meta = query_all(m, "solve(" + goal + ").");
    if (direct != meta) {
      return "case " + std::to_string(i) + ": direct and interpreted runs of " +
             goal + " disagree (" + std::to_string(direct.size()) + " vs " +
             std::to_string(meta.size()) + " answers)";
    }
  }
  return std::nullopt;
}

}  // namespace purelog::test
