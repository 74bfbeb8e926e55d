#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "purelog/term.hpp"

using namespace purelog;

namespace {

TermPtr c(const char* name) { return Term::make_const(name); }

TermPtr comp(const char* f, std::vector<TermPtr> args) {
  return Term::make_compound(f, std::move(args));
}

}  // namespace

TEST_CASE("construction and classification") {
  VarGen vg;
  TermPtr x = vg.fresh("X");
  TermPtr n = Term::make_int(7);
  TermPtr r = Term::make_float(1.5);
  TermPtr a = c("a");
  TermPtr fx = comp("f", {x});
  TermPtr fa = comp("f", {a});

  CHECK(x->is_var());
  CHECK(n->is_int());
  CHECK(n->is_number());
  CHECK(r->is_float());
  CHECK(a->is_const());
  CHECK(a->is_callable());
  CHECK(fx->is_compound());
  CHECK(fx->arity() == 1);
  CHECK(fx->name() == "f");

  CHECK(a->is_ground());
  CHECK(n->is_ground());
  CHECK(fa->is_ground());
  CHECK_FALSE(x->is_ground());
  CHECK_FALSE(fx->is_ground());
}

TEST_CASE("list helpers") {
  VarGen vg;
  TermPtr t = vg.fresh("T");
  TermPtr abc = make_list({c("a"), c("b"), c("c")});

  CHECK(is_nil(nil_term()));
  CHECK_FALSE(is_nil(abc));
  CHECK(abc->name() == ".");
  CHECK(abc->arity() == 2);

  auto elems = list_elements(abc);
  REQUIRE(elems.has_value());
  REQUIRE(elems->size() == 3);
  CHECK((*elems)[0]->name() == "a");
  CHECK((*elems)[2]->name() == "c");

  TermPtr partial = make_list({c("a")}, t);
  CHECK_FALSE(list_elements(partial).has_value());
  TermPtr improper = make_list({c("a")}, c("end"));
  CHECK_FALSE(list_elements(improper).has_value());

  CHECK(debug_string(abc) == "[a,b,c]");
  CHECK(debug_string(partial) == "[a|T]");
}

TEST_CASE("syntactic equality and renaming equality") {
  VarGen vg;
  TermPtr x = vg.fresh("X");
  TermPtr y = vg.fresh("Y");
  TermPtr a2 = vg.fresh("A");
  TermPtr b2 = vg.fresh("B");

  CHECK(syntactic_equal(comp("f", {x, y}), comp("f", {x, y})));
  CHECK_FALSE(syntactic_equal(comp("f", {x, y}), comp("f", {x, x})));
  CHECK_FALSE(syntactic_equal(c("a"), c("b")));
  CHECK(syntactic_equal(Term::make_int(3), Term::make_int(3)));
  CHECK_FALSE(syntactic_equal(Term::make_int(3), Term::make_float(3.0)));

  CHECK(equal_up_to_renaming(comp("f", {x, y}), comp("f", {a2, b2})));
  CHECK(equal_up_to_renaming(comp("f", {x, x}), comp("f", {a2, a2})));
  CHECK_FALSE(equal_up_to_renaming(comp("f", {x, x}), comp("f", {a2, b2})));
  CHECK_FALSE(equal_up_to_renaming(comp("f", {x, y}), comp("f", {a2, a2})));
  // the renaming must be a bijection in both directions
  CHECK_FALSE(equal_up_to_renaming(comp("f", {x, y, x}), comp("f", {a2, a2, a2})));
}

TEST_CASE("plain occurrence") {
  VarGen vg;
  TermPtr x = vg.fresh("X");
  TermPtr y = vg.fresh("Y");
  CHECK(occurs_in(*x, x));
  CHECK(occurs_in(*x, comp("f", {c("a"), comp("g", {x})})));
  CHECK_FALSE(occurs_in(*x, comp("f", {y})));
  CHECK_FALSE(occurs_in(*x, c("a")));
}

TEST_CASE("substitution map behavior") {
  VarGen vg;
  TermPtr x = vg.fresh("X");
  TermPtr y = vg.fresh("Y");

  Substitution s;
  CHECK(s.empty());
  s.bind(x, x);  // identity pairs are not stored
  CHECK(s.empty());
  s.bind(x, c("a"));
  s.bind(y, comp("f", {x}));
  CHECK(s.size() == 2);
  REQUIRE(s.lookup(*x) != nullptr);
  CHECK((*s.lookup(*x))->name() == "a");
  CHECK(s.contains(*y));

  s.bind(x, c("b"));  // rebinding replaces in place
  CHECK(s.size() == 2);
  CHECK((*s.lookup(*x))->name() == "b");
}

TEST_CASE("substitution application replaces simultaneously") {
  VarGen vg;
  TermPtr x = vg.fresh("X");
  TermPtr y = vg.fresh("Y");
  TermPtr z = vg.fresh("Z");

  Substitution s;
  s.bind(x, comp("f", {z}));
  s.bind(y, comp("g", {z}));
  TermPtr result = apply_substitution(comp("h", {x, y}), s);
  CHECK(debug_string(result) == "h(f(Z),g(Z))");

  // the image of X must not be rewritten again by the Y pair
  Substitution swap;
  swap.bind(x, y);
  swap.bind(y, c("a"));
  CHECK(debug_string(apply_substitution(comp("f", {x, y}), swap)) == "f(Y,a)");

  // untouched subterms are shared, ground terms come back unchanged
  TermPtr ground = comp("f", {c("a"), Term::make_int(2)});
  CHECK(apply_substitution(ground, s).get() == ground.get());
}

TEST_CASE("composition applies the update to prior images") {
  VarGen vg;
  TermPtr x = vg.fresh("X");
  TermPtr y = vg.fresh("Y");
  TermPtr z = vg.fresh("Z");
  TermPtr u = vg.fresh("U");
  TermPtr d = c("d");

  Substitution gamma;
  gamma.bind(x, comp("g", {z}));
  gamma.bind(y, c("a"));
  Substitution delta;
  delta.bind(u, comp("g", {d}));
  delta.bind(z, d);

  Substitution combined = compose(gamma, delta);
  CHECK(combined.size() == 4);
  CHECK(debug_string(*combined.lookup(*x)) == "g(d)");
  CHECK(debug_string(*combined.lookup(*y)) == "a");
  CHECK(debug_string(*combined.lookup(*u)) == "g(d)");
  CHECK(debug_string(*combined.lookup(*z)) == "d");
}

TEST_CASE("composition corner cases") {
  VarGen vg;
  TermPtr x = vg.fresh("X");
  TermPtr y = vg.fresh("Y");

  // an earlier binding for the same variable wins
  Substitution g1, d1;
  g1.bind(x, c("a"));
  d1.bind(x, c("b"));
  Substitution r1 = compose(g1, d1);
  CHECK(r1.size() == 1);
  CHECK((*r1.lookup(*x))->name() == "a");

  // pairs that collapse to identities are dropped
  Substitution g2, d2;
  g2.bind(x, y);
  d2.bind(y, x);
  Substitution r2 = compose(g2, d2);
  CHECK(r2.size() == 1);
  CHECK_FALSE(r2.contains(*x));
  REQUIRE(r2.contains(*y));
  CHECK((*r2.lookup(*y))->var_id() == x->var_id());

  // composing with the empty substitution changes nothing
  Substitution empty;
  Substitution r3 = compose(g1, empty);
  CHECK(r3.size() == 1);
  CHECK((*r3.lookup(*x))->name() == "a");
  Substitution r4 = compose(empty, d1);
  CHECK(r4.size() == 1);
  CHECK((*r4.lookup(*x))->name() == "b");
}

TEST_CASE("variable source issues distinct identities") {
  VarGen vg;
  TermPtr a = vg.fresh("A");
  TermPtr b = vg.fresh("A");
  CHECK(a->var_id() != b->var_id());
  CHECK(a->name() == b->name());
  CHECK(vg.issued() == 2);
  CHECK_FALSE(syntactic_equal(a, b));
}

TEST_CASE("binding store with trail") {
  VarGen vg;
  Bindings b;
  TermPtr x = vg.fresh("X");
  TermPtr y = vg.fresh("Y");
  TermPtr z = vg.fresh("Z");

  CHECK_FALSE(b.is_bound(*x));
  CHECK(b.deref(x).get() == x.get());

  Bindings::Mark m0 = b.mark();
  b.bind(x, y);
  b.bind(y, comp("f", {z}));
  CHECK(b.is_bound(*x));
  CHECK(b.deref(x)->name() == "f");  // chains are followed
  CHECK(debug_string(b.resolve(comp("g", {x}))) == "g(f(Z))");

  Bindings::Mark m1 = b.mark();
  b.bind(z, c("a"));
  CHECK(debug_string(b.resolve(x)) == "f(a)");

  b.undo_to(m1);
  CHECK_FALSE(b.is_bound(*z));
  CHECK(debug_string(b.resolve(x)) == "f(Z)");
  b.undo_to(m0);
  CHECK_FALSE(b.is_bound(*x));
  CHECK_FALSE(b.is_bound(*y));
}

TEST_CASE("resolve shares untouched structure and rejects cycles") {
  VarGen vg;
  Bindings b;
  TermPtr x = vg.fresh("X");
  TermPtr ground = comp("f", {c("a"), make_list({c("b")})});
  CHECK(b.resolve(ground).get() == ground.get());

  b.bind(x, comp("f", {x}));
  CHECK_THROWS_AS(b.resolve(x), PrologError);
  try {
    b.resolve(comp("g", {x}));
    FAIL("expected a cyclic-term error");
  } catch (const PrologError& e) {
    CHECK(e.kind() == ErrorKind::Cyclic);
  }
  b.undo_to(0);
}

TEST_CASE("occurrence through bindings") {
  VarGen vg;
  Bindings b;
  TermPtr x = vg.fresh("X");
  TermPtr y = vg.fresh("Y");
  TermPtr z = vg.fresh("Z");

  CHECK_FALSE(occurs_in(*x, comp("f", {y}), b));
  b.bind(y, comp("g", {x}));
  CHECK(occurs_in(*x, comp("f", {y}), b));
  CHECK(b.occurs(*x, y));
  CHECK_FALSE(b.occurs(*z, y));
  b.undo_to(0);
}
