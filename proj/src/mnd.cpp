#include "oidal/mnd.hpp"

namespace oidal {

ValidationReport validate_monad(const Monad& m) {
  ValidationReport rep;
  rep.subject = "monad " + m.name;
  if (*m.endo.src != *m.base || *m.endo.dst != *m.base) {
    rep.add("shape", "endofunctor is not an endo 1-cell on the base");
    return rep;
  }
  rep.merge(validate_functor(m.endo));
  rep.merge(validate_nat(m.mult));
  rep.merge(validate_nat(m.unit));
  if (!rep.ok()) return rep;

  Fun tt = compose_fun(m.endo, m.endo);
  if (m.mult.src != tt || m.mult.dst != m.endo) rep.add("shape", "mult is not t.t -> t");
  if (m.unit.src != identity_fun(m.base) || m.unit.dst != m.endo)
    rep.add("shape", "unit is not 1 -> t");
  if (!rep.ok()) return rep;

  Nat lhs = vcomp(m.mult, whisker_right(m.mult, m.endo));
  Nat rhs = vcomp(m.mult, whisker_left(m.endo, m.mult));
  for (const Id& x : m.base->objects)
    if (lhs.at(x) != rhs.at(x)) rep.add("associativity", "at " + x);

  Nat lu = vcomp(m.mult, whisker_right(m.unit, m.endo));
  Nat ru = vcomp(m.mult, whisker_left(m.endo, m.unit));
  for (const Id& x : m.base->objects) {
    Id idc = m.base->id_of(m.endo.ob(x));
    if (lu.at(x) != idc) rep.add("left-unit", "at " + x);
    if (ru.at(x) != idc) rep.add("right-unit", "at " + x);
  }
  return rep;
}

ValidationReport validate_monad_mor(const MonadMorH& m) {
  ValidationReport rep;
  rep.subject = "monad morphism " + m.name;
  rep.merge(validate_monad(m.src));
  rep.merge(validate_monad(m.dst));
  rep.merge(validate_functor(m.f));
  rep.merge(validate_nat(m.chi));
  if (!rep.ok()) return rep;
  if (*m.f.src != *m.src.base || *m.f.dst != *m.dst.base) {
    rep.add("shape", "functor boundaries do not match the monads");
    return rep;
  }
  if (m.chi.src != compose_fun(m.dst.endo, m.f) || m.chi.dst != compose_fun(m.f, m.src.endo)) {
    rep.add("shape", "chi is not s.f -> f.t");
    return rep;
  }
  Nat lhs = vcomp(whisker_left(m.f, m.src.mult),
                  vcomp(whisker_right(m.chi, m.src.endo), whisker_left(m.dst.endo, m.chi)));
  Nat rhs = vcomp(m.chi, whisker_right(m.dst.mult, m.f));
  for (const Id& x : m.f.src->objects)
    if (lhs.at(x) != rhs.at(x)) rep.add("multiplicativity", "at " + x);

  Nat ulhs = whisker_left(m.f, m.src.unit);
  Nat urhs = vcomp(m.chi, whisker_right(m.dst.unit, m.f));
  for (const Id& x : m.f.src->objects)
    if (ulhs.at(x) != urhs.at(x)) rep.add("unitality", "at " + x);
  return rep;
}

ValidationReport validate_monad_mor(const MonadMorV& m) {
  ValidationReport rep;
  rep.subject = "monad morphism " + m.name;
  rep.merge(validate_monad(m.src));
  rep.merge(validate_monad(m.dst));
  rep.merge(validate_functor(m.f));
  rep.merge(validate_nat(m.chi));
  if (!rep.ok()) return rep;
  if (*m.f.src != *m.src.base || *m.f.dst != *m.dst.base) {
    rep.add("shape", "functor boundaries do not match the monads");
    return rep;
  }
  if (m.chi.src != compose_fun(m.f, m.src.endo) || m.chi.dst != compose_fun(m.dst.endo, m.f)) {
    rep.add("shape", "chi is not f.t -> s.f");
    return rep;
  }
  Nat lhs = vcomp(m.chi, whisker_left(m.f, m.src.mult));
  Nat rhs = vcomp(whisker_right(m.dst.mult, m.f),
                  vcomp(whisker_left(m.dst.endo, m.chi), whisker_right(m.chi, m.src.endo)));
  for (const Id& x : m.f.src->objects)
    if (lhs.at(x) != rhs.at(x)) rep.add("multiplicativity", "at " + x);

  Nat ulhs = vcomp(m.chi, whisker_left(m.f, m.src.unit));
  Nat urhs = whisker_right(m.dst.unit, m.f);
  for (const Id& x : m.f.src->objects)
    if (ulhs.at(x) != urhs.at(x)) rep.add("unitality", "at " + x);
  return rep;
}

ValidationReport validate_monad_trans(const MonadTransH& t) {
  ValidationReport rep;
  rep.subject = "monad transformation " + t.name;
  rep.merge(validate_monad_mor(t.src));
  rep.merge(validate_monad_mor(t.dst));
  rep.merge(validate_nat(t.omega));
  if (!rep.ok()) return rep;
  if (t.src.src != t.dst.src || t.src.dst != t.dst.dst) {
    rep.add("shape", "source and target cells join different monads");
    return rep;
  }
  if (t.omega.src != t.src.f || t.omega.dst != t.dst.f) {
    rep.add("shape", "omega is not src.f -> dst.f");
    return rep;
  }
  Nat lhs = vcomp(whisker_right(t.omega, t.src.src.endo), t.src.chi);
  Nat rhs = vcomp(t.dst.chi, whisker_left(t.src.dst.endo, t.omega));
  for (const Id& x : t.omega.src.src->objects)
    if (lhs.at(x) != rhs.at(x)) rep.add("compatibility", "at " + x);
  return rep;
}

ValidationReport validate_monad_trans(const MonadTransV& t) {
  ValidationReport rep;
  rep.subject = "monad transformation " + t.name;
  rep.merge(validate_monad_mor(t.src));
  rep.merge(validate_monad_mor(t.dst));
  rep.merge(validate_nat(t.omega));
  if (!rep.ok()) return rep;
  if (t.src.src != t.dst.src || t.src.dst != t.dst.dst) {
    rep.add("shape", "source and target cells join different monads");
    return rep;
  }
  if (t.omega.src != t.src.f || t.omega.dst != t.dst.f) {
    rep.add("shape", "omega is not src.f -> dst.f");
    return rep;
  }
  Nat lhs = vcomp(t.dst.chi, whisker_right(t.omega, t.src.src.endo));
  Nat rhs = vcomp(whisker_left(t.src.dst.endo, t.omega), t.src.chi);
  for (const Id& x : t.omega.src.src->objects)
    if (lhs.at(x) != rhs.at(x)) rep.add("compatibility", "at " + x);
  return rep;
}

Monad identity_monad(CatPtr a, const std::string& name) {
  Monad m;
  m.base = a;
  m.endo = identity_fun(a);
  m.mult = identity_nat(m.endo);
  m.unit = identity_nat(m.endo);
  m.name = name.empty() ? "1_" + a->label : name;
  return m;
}

MonadMorH identity_mor_h(const Monad& m) {
  MonadMorH c;
  c.src = c.dst = m;
  c.f = identity_fun(m.base);
  c.chi = identity_nat(m.endo);
  c.name = "1_" + m.name;
  return c;
}

MonadMorV identity_mor_v(const Monad& m) {
  MonadMorV c;
  c.src = c.dst = m;
  c.f = identity_fun(m.base);
  c.chi = identity_nat(m.endo);
  c.name = "1_" + m.name;
  return c;
}

MonadMorH compose_h(const MonadMorH& g, const MonadMorH& f) {
  if (f.dst != g.src) throw BoundaryError("compose_h: middle monads differ");
  MonadMorH c;
  c.src = f.src;
  c.dst = g.dst;
  c.f = compose_fun(g.f, f.f);
  c.chi = vcomp(whisker_left(g.f, f.chi), whisker_right(g.chi, f.f));
  c.name = g.name + "." + f.name;
  return c;
}

MonadMorV compose_v(const MonadMorV& g, const MonadMorV& f) {
  if (f.dst != g.src) throw BoundaryError("compose_v: middle monads differ");
  MonadMorV c;
  c.src = f.src;
  c.dst = g.dst;
  c.f = compose_fun(g.f, f.f);
  c.chi = vcomp(whisker_right(g.chi, f.f), whisker_left(g.f, f.chi));
  c.name = g.name + "." + f.name;
  return c;
}

Monad monoidal_product_monads(const Monad& m1, const Monad& m2) {
  Monad m;
  m.base = product(m1.base, m2.base);
  m.endo = product_fun(m1.endo, m2.endo);
  m.mult = product_nat(m1.mult, m2.mult);
  m.unit = product_nat(m1.unit, m2.unit);
  m.name = m1.name + "(x)" + m2.name;
  return m;
}

MonadMorH product_mor(const MonadMorH& f, const MonadMorH& g) {
  MonadMorH c;
  c.src = monoidal_product_monads(f.src, g.src);
  c.dst = monoidal_product_monads(f.dst, g.dst);
  c.f = product_fun(f.f, g.f);
  c.chi = product_nat(f.chi, g.chi);
  c.name = f.name + "(x)" + g.name;
  return c;
}

MonadMorV product_mor(const MonadMorV& f, const MonadMorV& g) {
  MonadMorV c;
  c.src = monoidal_product_monads(f.src, g.src);
  c.dst = monoidal_product_monads(f.dst, g.dst);
  c.f = product_fun(f.f, g.f);
  c.chi = product_nat(f.chi, g.chi);
  c.name = f.name + "(x)" + g.name;
  return c;
}

MonadMorH symmetry_monad_cell(const Monad& m1, const Monad& m2) {
  Monad src = monoidal_product_monads(m1, m2);
  Monad dst = monoidal_product_monads(m2, m1);
  Fun sigma = flip(m1.base, m2.base);
  MonadMorH c;
  c.src = src;
  c.dst = dst;
  c.f = sigma;
  std::map<Id, Id> comps;
  for (const Id& x : src.base->objects)
    comps[x] = dst.base->id_of(dst.endo.ob(sigma.ob(x)));
  c.chi = nat_from_components(compose_fun(dst.endo, sigma), compose_fun(sigma, src.endo),
                              comps);
  c.name = "sym_" + m1.name + "," + m2.name;
  return c;
}

MonadMorV symmetry_monad_cell_v(const Monad& m1, const Monad& m2) {
  Monad src = monoidal_product_monads(m1, m2);
  Monad dst = monoidal_product_monads(m2, m1);
  Fun sigma = flip(m1.base, m2.base);
  MonadMorV c;
  c.src = src;
  c.dst = dst;
  c.f = sigma;
  std::map<Id, Id> comps;
  for (const Id& x : src.base->objects)
    comps[x] = dst.base->id_of(dst.endo.ob(sigma.ob(x)));
  c.chi = nat_from_components(compose_fun(sigma, src.endo), compose_fun(dst.endo, sigma),
                              comps);
  c.name = "sym_" + m1.name + "," + m2.name;
  return c;
}

}  // namespace oidal
