#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oidal/fixtures.hpp"

using namespace oidal;

namespace {

CatPtr chain2() { return poset_category("c2", {"0", "1"}, {{"0", "1"}}); }
CatPtr chain3() {
  return poset_category("c3", {"0", "1", "2"}, {{"0", "1"}, {"0", "2"}, {"1", "2"}});
}
CatPtr diamond() {
  return poset_category("d", {"bot", "la", "rb", "top"},
                        {{"bot", "la"}, {"bot", "rb"}, {"bot", "top"},
                         {"la", "top"}, {"rb", "top"}});
}

Monad cl3() {
  return closure_monad("cl3", chain3(), {{"0", "1"}, {"1", "1"}, {"2", "2"}});
}
Monad dcl() {
  return closure_monad("dcl", diamond(),
                       {{"bot", "bot"}, {"la", "la"}, {"rb", "top"}, {"top", "top"}});
}

}  // namespace

TEST_CASE("closure monads validate") {
  CHECK(validate_monad(cl3()).ok());
  CHECK(validate_monad(dcl()).ok());
  CHECK(validate_monad(identity_monad(chain3())).ok());
}

TEST_CASE("non-monotone closure data is refused") {
  CHECK_THROWS_AS(
      closure_monad("bad", chain3(), {{"0", "2"}, {"1", "1"}, {"2", "2"}}),
      InputError);
}

TEST_CASE("a broken unit law is reported") {
  Monad m = identity_monad(chain3());
  // corrupt the unit into the closure's unit while keeping the identity endo
  Monad cl = cl3();
  m.unit.components = m.mult.components;
  m.unit.components["0"] = "0\xe2\x89\xa4" "0";
  CHECK(validate_monad(m).ok());  // still the identity monad
  Monad bad = cl;
  bad.unit = identity_nat(bad.endo);
  CHECK_FALSE(validate_monad(bad).ok());
}

TEST_CASE("horizontal morphisms: identity is neutral and composites validate") {
  Monad a = cl3();
  Monad b = dcl();
  Fun f = monotone_fun("f3d", a.base, b.base, {{"0", "bot"}, {"1", "la"}, {"2", "top"}});
  MonadMorH m{a, b, f, nat_between(compose_fun(b.endo, f), compose_fun(f, a.endo)), "h"};
  CHECK(validate_monad_mor(m).ok());
  CHECK(compose_h(identity_mor_h(b), m) == m);
  CHECK(compose_h(m, identity_mor_h(a)) == m);

  Fun g = monotone_fun("g", b.base, b.base,
                       {{"bot", "bot"}, {"la", "top"}, {"rb", "top"}, {"top", "top"}});
  MonadMorH n{b, b, g, nat_between(compose_fun(b.endo, g), compose_fun(g, b.endo)), "n"};
  CHECK(validate_monad_mor(n).ok());
  CHECK(validate_monad_mor(compose_h(n, m)).ok());
}

TEST_CASE("the composite 2-cell matches the displayed formula") {
  Monad a = cl3();
  Monad b = dcl();
  Fun f = monotone_fun("f3d", a.base, b.base, {{"0", "bot"}, {"1", "la"}, {"2", "top"}});
  MonadMorH m{a, b, f, nat_between(compose_fun(b.endo, f), compose_fun(f, a.endo)), "m"};
  Fun g = monotone_fun("g", b.base, b.base,
                       {{"bot", "bot"}, {"la", "top"}, {"rb", "top"}, {"top", "top"}});
  MonadMorH n{b, b, g, nat_between(compose_fun(b.endo, g), compose_fun(g, b.endo)), "n"};
  MonadMorH c = compose_h(n, m);
  Nat expected = vcomp(whisker_left(n.f, m.chi), whisker_right(n.chi, m.f));
  CHECK(c.chi == expected);
}

TEST_CASE("vertical morphisms compose dually") {
  Monad a = cl3();
  Monad b = dcl();
  Fun g = monotone_fun("g3d", a.base, b.base, {{"0", "bot"}, {"1", "bot"}, {"2", "top"}});
  MonadMorV m{a, b, g, nat_between(compose_fun(g, a.endo), compose_fun(b.endo, g)), "v"};
  CHECK(validate_monad_mor(m).ok());
  CHECK(compose_v(identity_mor_v(b), m) == m);
  CHECK(compose_v(m, identity_mor_v(a)) == m);
  Fun k = monotone_fun("k", b.base, b.base,
                       {{"bot", "bot"}, {"la", "bot"}, {"rb", "rb"}, {"top", "top"}});
  MonadMorV n{b, b, k, nat_between(compose_fun(k, b.endo), compose_fun(b.endo, k)), "k"};
  CHECK(validate_monad_mor(n).ok());
  MonadMorV c = compose_v(n, m);
  CHECK(validate_monad_mor(c).ok());
  CHECK(c.chi == vcomp(whisker_right(n.chi, m.f), whisker_left(n.f, m.chi)));
}

TEST_CASE("monoidal product of monads") {
  Monad t = closure_monad("t", chain2(), {{"0", "1"}, {"1", "1"}});
  Monad s = closure_monad("s", chain2(), {{"0", "0"}, {"1", "1"}});
  Monad ts = monoidal_product_monads(t, s);
  CHECK(validate_monad(ts).ok());
  CHECK(ts.base->objects.size() == 4);
  // componentwise closure on the square
  CHECK(ts.endo.ob("(0,0)") == "(1,0)");
  CHECK(ts.endo.ob("(1,1)") == "(1,1)");
  // the quadruple is built componentwise
  CHECK(*ts.base == *product(t.base, s.base));
  CHECK(ts.endo == product_fun(t.endo, s.endo));
  CHECK(ts.mult == product_nat(t.mult, s.mult));
  CHECK(ts.unit == product_nat(t.unit, s.unit));

  Monad unit = identity_monad(terminal_category());
  CHECK(monoidal_product_monads(t, unit) == t);
  CHECK(monoidal_product_monads(unit, t) == t);
}

TEST_CASE("symmetry cells validate and are involutive") {
  Monad t = cl3();
  Monad s = dcl();
  MonadMorH sym = symmetry_monad_cell(t, s);
  CHECK(validate_monad_mor(sym).ok());
  MonadMorH round = compose_h(symmetry_monad_cell(s, t), sym);
  CHECK(round == identity_mor_h(monoidal_product_monads(t, s)));
  CHECK(validate_monad_mor(symmetry_monad_cell_v(t, s)).ok());

  // against the trivial monad the symmetry cell is an identity cell
  Monad unit = identity_monad(terminal_category());
  CHECK(symmetry_monad_cell(t, unit) == identity_mor_h(t));
  CHECK(symmetry_monad_cell(unit, t) == identity_mor_h(t));
}

TEST_CASE("monad transformations over closure morphisms") {
  Monad a = cl3();
  Monad b = dcl();
  Fun f1 = monotone_fun("f1", a.base, b.base, {{"0", "bot"}, {"1", "la"}, {"2", "top"}});
  Fun f2 = monotone_fun("f2", a.base, b.base, {{"0", "la"}, {"1", "la"}, {"2", "top"}});
  MonadMorH m1{a, b, f1, nat_between(compose_fun(b.endo, f1), compose_fun(f1, a.endo)), "m1"};
  MonadMorH m2{a, b, f2, nat_between(compose_fun(b.endo, f2), compose_fun(f2, a.endo)), "m2"};
  CHECK(validate_monad_mor(m1).ok());
  CHECK(validate_monad_mor(m2).ok());
  MonadTransH t{m1, m2, nat_between(f1, f2), "t"};
  CHECK(validate_monad_trans(t).ok());

  // Vertical morphisms carry the dual notion.
  Fun g1 = monotone_fun("g1", a.base, b.base, {{"0", "bot"}, {"1", "bot"}, {"2", "top"}});
  MonadMorV v1{a, b, g1, nat_between(compose_fun(g1, a.endo), compose_fun(b.endo, g1)), "v1"};
  MonadMorV v2{a, b, g1, nat_between(compose_fun(g1, a.endo), compose_fun(b.endo, g1)), "v2"};
  MonadTransV tv{v1, v2, identity_nat(g1), "tv"};
  CHECK(validate_monad_trans(tv).ok());
}

TEST_CASE("tensor of morphisms is a morphism and interchanges with composition") {
  Monad a = cl3();
  Fun f = monotone_fun("f", a.base, a.base, {{"0", "1"}, {"1", "1"}, {"2", "2"}});
  MonadMorH m{a, a, f, nat_between(compose_fun(a.endo, f), compose_fun(f, a.endo)), "m"};
  REQUIRE(validate_monad_mor(m).ok());
  MonadMorH mm = product_mor(m, m);
  CHECK(validate_monad_mor(mm).ok());
  CHECK(product_mor(compose_h(m, m), compose_h(m, m)) ==
        compose_h(product_mor(m, m), product_mor(m, m)));
}
