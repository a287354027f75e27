#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oidal/fixtures.hpp"

using namespace oidal;

namespace {

CatPtr chain(int n, const std::string& label) {
  std::vector<Id> elems;
  std::vector<std::pair<Id, Id>> leq;
  for (int i = 0; i < n; ++i) elems.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) leq.push_back({elems[i], elems[j]});
  return poset_category(label, elems, leq);
}

CatPtr diamond() {
  return poset_category("diamond", {"bot", "la", "rb", "top"},
                        {{"bot", "la"},
                         {"bot", "rb"},
                         {"bot", "top"},
                         {"la", "top"},
                         {"rb", "top"}});
}

}  // namespace

TEST_CASE("terminal and chains validate with empty reports") {
  CHECK(validate_category(*terminal_category()).ok());
  CHECK(validate_category(*chain(3, "c3")).ok());
  CHECK(validate_category(*diamond()).ok());
}

TEST_CASE("a mis-set composite is reported with its witness pair") {
  CatPtr c3 = chain(3, "c3");
  auto table = c3->table;
  // compose(1<=2, 0<=1) deliberately redirected to the identity on 0
  table[{"1\xe2\x89\xa4" "2", "0\xe2\x89\xa4" "1"}] = "0\xe2\x89\xa4" "0";
  CatPtr broken = FinCat::make("broken", c3->objects, c3->morphisms, c3->identities, table);
  ValidationReport rep = validate_category(*broken);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.witness.find("1\xe2\x89\xa4" "2") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("product of chains is the commuting square and is strictly monoidal") {
  CatPtr c2 = chain(2, "c2");
  CatPtr sq = product(c2, c2);
  CHECK(sq->objects.size() == 4);
  CHECK(sq->morphisms.size() == 9);
  CHECK(validate_category(*sq).ok());

  CatPtr c3 = chain(3, "c3");
  CHECK(*product(c2, terminal_category()) == *c2);
  CHECK(*product(terminal_category(), c2) == *c2);
  CHECK(*product(product(c2, c3), c2) == *product(c2, product(c3, c2)));
}

TEST_CASE("flip is an involutive symmetry satisfying the hexagon") {
  CatPtr a = chain(2, "A");
  CatPtr b = chain(3, "B");
  CatPtr c = diamond();

  CHECK(compose_fun(flip(b, a), flip(a, b)) == identity_fun(product(a, b)));
  CHECK(flip(terminal_category(), a) == identity_fun(a));

  Fun lhs = flip(a, product(b, c));
  Fun rhs = compose_fun(product_fun(identity_fun(b), flip(a, c)),
                        product_fun(flip(a, b), identity_fun(c)));
  CHECK(lhs == rhs);

  // Naturality against a pair of monotone maps.
  Fun f = monotone_fun("f", a, b, {{"0", "0"}, {"1", "2"}});
  Fun g = monotone_fun("g", b, c, {{"0", "bot"}, {"1", "la"}, {"2", "top"}});
  CHECK(compose_fun(flip(b, c), product_fun(f, g)) ==
        compose_fun(product_fun(g, f), flip(a, b)));
}

TEST_CASE("horizontal composition of identity cells is the identity cell") {
  CatPtr a = chain(3, "A");
  CatPtr b = diamond();
  Fun f = monotone_fun("f", a, b, {{"0", "bot"}, {"1", "la"}, {"2", "top"}});
  Fun g = monotone_fun("g", b, b,
                       {{"bot", "bot"}, {"la", "top"}, {"rb", "top"}, {"top", "top"}});
  CHECK(hcomp_nat(identity_nat(g), identity_nat(f)) == identity_nat(compose_fun(g, f)));
}

TEST_CASE("whiskering a cell with a constant functor yields a constant cell") {
  CatPtr c3 = chain(3, "c3");
  Fun f = identity_fun(c3);
  Fun g = monotone_fun("g", c3, c3, {{"0", "1"}, {"1", "1"}, {"2", "2"}});
  Nat alpha = nat_between(f, g);
  Fun konst = monotone_fun("k", c3, c3, {{"0", "1"}, {"1", "1"}, {"2", "1"}});
  Nat w = whisker_left(konst, alpha);
  for (const Id& x : c3->objects) CHECK(w.at(x) == c3->id_of("1"));
}

TEST_CASE("middle four interchange on the diamond") {
  CatPtr d = diamond();
  Fun f0 = monotone_fun("f0", d, d,
                        {{"bot", "bot"}, {"la", "bot"}, {"rb", "bot"}, {"top", "bot"}});
  Fun f1 = monotone_fun("f1", d, d,
                        {{"bot", "bot"}, {"la", "la"}, {"rb", "bot"}, {"top", "la"}});
  Fun f2 = identity_fun(d);
  Fun g0 = identity_fun(d);
  Fun g1 = monotone_fun("g1", d, d,
                        {{"bot", "la"}, {"la", "la"}, {"rb", "top"}, {"top", "top"}});
  Fun g2 = monotone_fun("g2", d, d,
                        {{"bot", "top"}, {"la", "top"}, {"rb", "top"}, {"top", "top"}});
  Nat a = nat_between(f0, f1), a2 = nat_between(f1, f2);
  Nat b = nat_between(g0, g1), b2 = nat_between(g1, g2);
  CHECK(vcomp(hcomp_nat(b2, a2), hcomp_nat(b, a)) ==
        hcomp_nat(vcomp(b2, b), vcomp(a2, a)));
}

TEST_CASE("hcomp agrees with the other whiskering order") {
  CatPtr d = diamond();
  Fun f0 = monotone_fun("f0", d, d,
                        {{"bot", "bot"}, {"la", "bot"}, {"rb", "rb"}, {"top", "rb"}});
  Fun f1 = identity_fun(d);
  Fun g0 = identity_fun(d);
  Fun g1 = monotone_fun("g1", d, d,
                        {{"bot", "la"}, {"la", "la"}, {"rb", "top"}, {"top", "top"}});
  Nat a = nat_between(f0, f1);
  Nat b = nat_between(g0, g1);
  CHECK(hcomp_nat(b, a) == vcomp(whisker_left(g1, a), whisker_right(b, f0)));
}

TEST_CASE("nat_between refuses missing components") {
  CatPtr c3 = chain(3, "c3");
  Fun f = monotone_fun("f", c3, c3, {{"0", "1"}, {"1", "1"}, {"2", "2"}});
  CHECK_THROWS_AS(nat_between(f, identity_fun(c3)), BoundaryError);
}

TEST_CASE("invertibility detection") {
  CatPtr c3 = chain(3, "c3");
  Fun f = identity_fun(c3);
  CHECK(nat_invertible(identity_nat(f)));
  Fun g = monotone_fun("g", c3, c3, {{"0", "1"}, {"1", "1"}, {"2", "2"}});
  CHECK_FALSE(nat_invertible(nat_between(f, g)));
}

TEST_CASE("user identifiers with reserved characters are rejected") {
  CHECK_THROWS_AS(poset_category("bad", {"a,b"}, {}), InputError);
  CHECK_THROWS_AS(poset_category("bad", {"a b"}, {}), InputError);
  CHECK(valid_user_id("x\xe2\x89\xa4y"));
  CHECK_FALSE(valid_user_id("x|y"));
}
