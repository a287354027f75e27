#include "oidal/oidal.hpp"

#include "oidal/dblcat.hpp"

namespace oidal {

namespace {

Fun id_fun(CatPtr a) { return identity_fun(a); }

// m (x) 1 : AAA -> AA and friends.
Fun m1(const Pseudomonoid& p) { return product_fun(p.mult, id_fun(p.base)); }
Fun one_m(const Pseudomonoid& p) { return product_fun(id_fun(p.base), p.mult); }
Fun u1(const Pseudomonoid& p) { return product_fun(p.unit, id_fun(p.base)); }
Fun one_u(const Pseudomonoid& p) { return product_fun(id_fun(p.base), p.unit); }

bool under_cap(std::size_t mor_count, int power) {
  double v = 1;
  for (int i = 0; i < power; ++i) {
    v *= static_cast<double>(mor_count);
    if (v > static_cast<double>(size_cap())) return false;
  }
  return true;
}

/// Compares two parallel composite 2-cells, or certifies the equation by
/// thinness when the products needed to assemble them exceed the cap.
struct DiagramChecker {
  ValidationReport& rep;
  const FinCat& hom_target;  // the category the 2-cells land in

  // build() closures assemble both sides; only called when under the cap.
  void equal(const std::string& law, std::size_t src_mor_count, int power,
             const std::function<std::pair<Nat, Nat>()>& build) {
    if (!under_cap(src_mor_count, power)) {
      if (hom_target.thin()) return;  // parallel cells in a thin category coincide
      rep.add(law, "diagram above size cap and codomain not thin");
      return;
    }
    auto [lhs, rhs] = build();
    if (lhs.src != rhs.src || lhs.dst != rhs.dst) {
      rep.add(law, "sides are not parallel");
      return;
    }
    for (const auto& [x, c] : lhs.components)
      if (c != rhs.at(x)) {
        rep.add(law, "at " + x);
        return;
      }
  }
};

}  // namespace

Pseudomonoid trivial_pseudomonoid() {
  Pseudomonoid p;
  p.base = terminal_category();
  p.mult = identity_fun(p.base);  // I x I = I
  p.unit = identity_fun(p.base);
  p.assoc = identity_nat(p.mult);
  p.lunit = identity_nat(p.mult);
  p.runit = identity_nat(p.mult);
  p.name = "I";
  return p;
}

ValidationReport validate_pseudomonoid(const Pseudomonoid& p) {
  ValidationReport rep;
  rep.subject = "pseudomonoid " + p.name;
  rep.merge(validate_functor(p.mult));
  rep.merge(validate_functor(p.unit));
  if (!rep.ok()) return rep;

  if (*p.mult.src != *product(p.base, p.base) || *p.mult.dst != *p.base)
    rep.add("shape", "mult is not A x A -> A");
  if (*p.unit.src != *terminal_category() || *p.unit.dst != *p.base)
    rep.add("shape", "unit is not I -> A");
  if (!rep.ok()) return rep;

  std::size_t n = p.base->morphisms.size();
  if (p.coherence_omitted) {
    if (!p.base->thin())
      rep.add("coherence", "cells omitted above size cap and base not thin");
    return rep;
  }

  rep.merge(validate_nat(p.assoc));
  rep.merge(validate_nat(p.lunit));
  rep.merge(validate_nat(p.runit));
  if (!rep.ok()) return rep;

  if (p.assoc.src != compose_fun(p.mult, m1(p)) || p.assoc.dst != compose_fun(p.mult, one_m(p)))
    rep.add("shape", "assoc is not m.m1 -> m.1m");
  if (p.lunit.src != compose_fun(p.mult, u1(p)) || p.lunit.dst != id_fun(p.base))
    rep.add("shape", "lunit is not m.u1 -> 1");
  if (p.runit.src != compose_fun(p.mult, one_u(p)) || p.runit.dst != id_fun(p.base))
    rep.add("shape", "runit is not m.1u -> 1");
  if (!rep.ok()) return rep;

  for (const Nat* cell : {&p.assoc, &p.lunit, &p.runit})
    if (!nat_invertible(*cell)) rep.add("invertibility", cell->label);

  DiagramChecker chk{rep, *p.base};
  chk.equal("pentagon", n, 4, [&] {
    Fun m11 = product_fun(p.mult, id_fun(product(p.base, p.base)));
    Fun oneone_m = product_fun(id_fun(product(p.base, p.base)), p.mult);
    Fun one_m_one = product_fun(id_fun(p.base), product_fun(p.mult, id_fun(p.base)));
    Nat top = vcomp(whisker_right(p.assoc, oneone_m), whisker_right(p.assoc, m11));
    Nat ida = identity_nat(id_fun(p.base));
    Nat s1 = whisker_left(p.mult, product_nat(p.assoc, ida));
    Nat s2 = whisker_right(p.assoc, one_m_one);
    Nat s3 = whisker_left(p.mult, product_nat(ida, p.assoc));
    return std::make_pair(top, vcomp(s3, vcomp(s2, s1)));
  });
  chk.equal("triangle", n, 2, [&] {
    Fun one_u_one = product_fun(id_fun(p.base), product_fun(p.unit, id_fun(p.base)));
    Nat ida = identity_nat(id_fun(p.base));
    Nat lhs = vcomp(whisker_left(p.mult, product_nat(ida, p.lunit)),
                    whisker_right(p.assoc, one_u_one));
    Nat rhs = whisker_left(p.mult, product_nat(p.runit, ida));
    return std::make_pair(lhs, rhs);
  });
  return rep;
}

namespace {

ValidationReport validate_cell_common(const std::string& subject, const Pseudomonoid& src,
                                      const Pseudomonoid& dst, const Fun& f) {
  ValidationReport rep;
  rep.subject = subject;
  rep.merge(validate_pseudomonoid(src));
  rep.merge(validate_pseudomonoid(dst));
  rep.merge(validate_functor(f));
  if (!rep.ok()) return rep;
  if (*f.src != *src.base || *f.dst != *dst.base)
    rep.add("shape", "underlying functor does not join the bases");
  return rep;
}

}  // namespace

ValidationReport validate_opmon_cell(const OpmonCell& c) {
  ValidationReport rep = validate_cell_common("opmonoidal cell " + c.name, c.src, c.dst, c.f);
  if (!rep.ok()) return rep;
  rep.merge(validate_nat(c.binary));
  rep.merge(validate_nat(c.nullary));
  if (!rep.ok()) return rep;

  Fun ff = product_fun(c.f, c.f);
  if (c.binary.src != compose_fun(c.f, c.src.mult) ||
      c.binary.dst != compose_fun(c.dst.mult, ff))
    rep.add("shape", "binary part is not f.m -> m'.ff");
  if (c.nullary.src != compose_fun(c.f, c.src.unit) || c.nullary.dst != c.dst.unit)
    rep.add("shape", "nullary part is not f.u -> u'");
  if (!rep.ok()) return rep;

  std::size_t n = c.src.base->morphisms.size();
  bool have_coherence = !c.src.coherence_omitted && !c.dst.coherence_omitted;
  DiagramChecker chk{rep, *c.dst.base};
  if (have_coherence) {
    chk.equal("coassociativity", n, 3, [&] {
      Fun fff = product_fun(ff, c.f);
      Nat l = vcomp(whisker_right(c.dst.assoc, fff),
                    vcomp(whisker_left(c.dst.mult, product_nat(c.binary, identity_nat(c.f))),
                          whisker_right(c.binary, m1(c.src))));
      Nat r = vcomp(whisker_left(c.dst.mult, product_nat(identity_nat(c.f), c.binary)),
                    vcomp(whisker_right(c.binary, one_m(c.src)),
                          whisker_left(c.f, c.src.assoc)));
      return std::make_pair(l, r);
    });
    chk.equal("counit-left", n, 1, [&] {
      Nat l = vcomp(whisker_right(c.dst.lunit, c.f),
                    vcomp(whisker_left(c.dst.mult, product_nat(c.nullary, identity_nat(c.f))),
                          whisker_right(c.binary, u1(c.src))));
      Nat r = whisker_left(c.f, c.src.lunit);
      return std::make_pair(l, r);
    });
    chk.equal("counit-right", n, 1, [&] {
      Nat l = vcomp(whisker_right(c.dst.runit, c.f),
                    vcomp(whisker_left(c.dst.mult, product_nat(identity_nat(c.f), c.nullary)),
                          whisker_right(c.binary, one_u(c.src))));
      Nat r = whisker_left(c.f, c.src.runit);
      return std::make_pair(l, r);
    });
  } else if (!c.dst.base->thin()) {
    rep.add("coherence", "pseudomonoid coherence unavailable and codomain not thin");
  }
  return rep;
}

ValidationReport validate_mon_cell(const MonCell& c) {
  ValidationReport rep = validate_cell_common("monoidal cell " + c.name, c.src, c.dst, c.f);
  if (!rep.ok()) return rep;
  rep.merge(validate_nat(c.binary));
  rep.merge(validate_nat(c.nullary));
  if (!rep.ok()) return rep;

  Fun ff = product_fun(c.f, c.f);
  if (c.binary.src != compose_fun(c.dst.mult, ff) ||
      c.binary.dst != compose_fun(c.f, c.src.mult))
    rep.add("shape", "binary part is not m'.ff -> f.m");
  if (c.nullary.src != c.dst.unit || c.nullary.dst != compose_fun(c.f, c.src.unit))
    rep.add("shape", "nullary part is not u' -> f.u");
  if (!rep.ok()) return rep;

  std::size_t n = c.src.base->morphisms.size();
  bool have_coherence = !c.src.coherence_omitted && !c.dst.coherence_omitted;
  DiagramChecker chk{rep, *c.dst.base};
  if (have_coherence) {
    chk.equal("associativity", n, 3, [&] {
      Fun fff = product_fun(ff, c.f);
      Nat l = vcomp(whisker_left(c.f, c.src.assoc),
                    vcomp(whisker_right(c.binary, m1(c.src)),
                          whisker_left(c.dst.mult, product_nat(c.binary, identity_nat(c.f)))));
      Nat r = vcomp(whisker_right(c.binary, one_m(c.src)),
                    vcomp(whisker_left(c.dst.mult, product_nat(identity_nat(c.f), c.binary)),
                          whisker_right(c.dst.assoc, fff)));
      return std::make_pair(l, r);
    });
    chk.equal("unit-left", n, 1, [&] {
      Nat l = vcomp(whisker_left(c.f, c.src.lunit),
                    vcomp(whisker_right(c.binary, u1(c.src)),
                          whisker_left(c.dst.mult, product_nat(c.nullary, identity_nat(c.f)))));
      Nat r = whisker_right(c.dst.lunit, c.f);
      return std::make_pair(l, r);
    });
    chk.equal("unit-right", n, 1, [&] {
      Nat l = vcomp(whisker_left(c.f, c.src.runit),
                    vcomp(whisker_right(c.binary, one_u(c.src)),
                          whisker_left(c.dst.mult, product_nat(identity_nat(c.f), c.nullary))));
      Nat r = whisker_right(c.dst.runit, c.f);
      return std::make_pair(l, r);
    });
  } else if (!c.dst.base->thin()) {
    rep.add("coherence", "pseudomonoid coherence unavailable and codomain not thin");
  }
  return rep;
}

OpmonCell compose_opmon(const OpmonCell& g, const OpmonCell& f) {
  if (!(f.dst == g.src))
    throw BoundaryError("compose_opmon: middle pseudomonoids differ");
  OpmonCell c;
  c.src = f.src;
  c.dst = g.dst;
  c.f = compose_fun(g.f, f.f);
  c.binary = vcomp(whisker_right(g.binary, product_fun(f.f, f.f)),
                   whisker_left(g.f, f.binary));
  c.nullary = vcomp(g.nullary, whisker_left(g.f, f.nullary));
  c.name = g.name + "." + f.name;
  return c;
}

MonCell compose_mon(const MonCell& g, const MonCell& f) {
  if (!(f.dst == g.src))
    throw BoundaryError("compose_mon: middle pseudomonoids differ");
  MonCell c;
  c.src = f.src;
  c.dst = g.dst;
  c.f = compose_fun(g.f, f.f);
  c.binary = vcomp(whisker_left(g.f, f.binary),
                   whisker_right(g.binary, product_fun(f.f, f.f)));
  c.nullary = vcomp(whisker_left(g.f, f.nullary), g.nullary);
  c.name = g.name + "." + f.name;
  return c;
}

OpmonCell identity_opmon(const Pseudomonoid& p) {
  OpmonCell c;
  c.src = c.dst = p;
  c.f = identity_fun(p.base);
  c.binary = identity_nat(p.mult);
  c.nullary = identity_nat(p.unit);
  c.name = "1_" + p.name;
  return c;
}

MonCell identity_mon(const Pseudomonoid& p) {
  MonCell c;
  c.src = c.dst = p;
  c.f = identity_fun(p.base);
  c.binary = identity_nat(p.mult);
  c.nullary = identity_nat(p.unit);
  c.name = "1_" + p.name;
  return c;
}

Fun middle_flip(CatPtr a, CatPtr b) {
  return product_fun(identity_fun(a), product_fun(flip(b, a), identity_fun(b)));
}

Pseudomonoid tensor_pseudomonoids(const Pseudomonoid& a, const Pseudomonoid& b) {
  Pseudomonoid p;
  p.base = product(a.base, b.base);
  p.mult = compose_fun(product_fun(a.mult, b.mult), middle_flip(a.base, b.base));
  p.unit = product_fun(a.unit, b.unit);
  p.name = a.name + "(x)" + b.name;

  std::size_t n = p.base->morphisms.size();
  if (a.coherence_omitted || b.coherence_omitted || !under_cap(n, 3)) {
    p.coherence_omitted = true;
    return p;
  }

  CatPtr sq = product(p.base, p.base);
  CatPtr cube = product(sq, p.base);
  auto component_of = [&](const Nat& na, const Nat& nb, const Id& x) {
    // x is a triple of pairs; regroup into a pair of triples.
    auto parts = name_components(x);
    int wa = a.base->obj_width(), wb = b.base->obj_width();
    std::vector<std::string> xs, ys;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < wa; ++j) xs.push_back(parts[pos++]);
      for (int j = 0; j < wb; ++j) ys.push_back(parts[pos++]);
    }
    return pair_name(na.at(make_tuple_name(xs)), nb.at(make_tuple_name(ys)));
  };

  {
    Fun src = compose_fun(p.mult, m1(p));
    Fun dst = compose_fun(p.mult, one_m(p));
    std::map<Id, Id> comps;
    for (const Id& x : cube->objects) comps[x] = component_of(a.assoc, b.assoc, x);
    p.assoc = nat_from_components(src, dst, comps);
  }
  auto unit_cell = [&](const Nat& na, const Nat& nb, const Fun& src) {
    std::map<Id, Id> comps;
    int wa = a.base->obj_width(), wb = b.base->obj_width();
    for (const Id& x : p.base->objects) {
      auto parts = name_components(x);
      std::vector<std::string> xs(parts.begin(), parts.begin() + wa);
      std::vector<std::string> ys(parts.begin() + wa, parts.end());
      (void)wb;
      comps[x] = pair_name(na.at(make_tuple_name(xs)), nb.at(make_tuple_name(ys)));
    }
    return nat_from_components(src, identity_fun(p.base), comps);
  };
  p.lunit = unit_cell(a.lunit, b.lunit, compose_fun(p.mult, u1(p)));
  p.runit = unit_cell(a.runit, b.runit, compose_fun(p.mult, one_u(p)));
  return p;
}

ValidationReport validate_duoidal(const Duoidal& d) {
  ValidationReport rep;
  rep.subject = "duoidal " + d.name;
  rep.merge(validate_pseudomonoid(d.pm_h));
  rep.merge(validate_pseudomonoid(d.pm_v));
  if (!rep.ok()) return rep;
  if (*d.pm_h.base != *d.pm_v.base) {
    rep.add("shape", "the two pseudomonoids live on different objects");
    return rep;
  }

  Pseudomonoid vv = tensor_pseudomonoids(d.pm_v, d.pm_v);
  Pseudomonoid hh = tensor_pseudomonoids(d.pm_h, d.pm_h);
  Pseudomonoid triv = trivial_pseudomonoid();

  {
    MonCell c{vv, d.pm_v, d.pm_h.mult, d.xi, d.xi0, d.name + "/mult-cell"};
    ValidationReport r = validate_mon_cell(c);
    r.subject = "interchange-binary";
    rep.merge(r);
  }
  {
    MonCell c{triv, d.pm_v, d.pm_h.unit, d.xi_0, d.xi00, d.name + "/unit-cell"};
    ValidationReport r = validate_mon_cell(c);
    r.subject = "interchange-nullary";
    rep.merge(r);
  }
  {
    Fun mid = middle_flip(d.pm_h.base, d.pm_h.base);
    Nat xi_shifted = whisker_right(d.xi, mid);
    OpmonCell c{hh, d.pm_h, d.pm_v.mult, xi_shifted, d.xi_0, d.name + "/vert-mult-cell"};
    ValidationReport r = validate_opmon_cell(c);
    r.subject = "vertical-mult-opmonoidal";
    rep.merge(r);
  }
  {
    OpmonCell c{trivial_pseudomonoid(), d.pm_h, d.pm_v.unit, d.xi0, d.xi00,
                d.name + "/vert-unit-cell"};
    ValidationReport r = validate_opmon_cell(c);
    r.subject = "vertical-unit-opmonoidal";
    rep.merge(r);
  }
  return rep;
}

MonadMorH opmon_mult_hcell(const OidalMonad& om) {
  const Pseudomonoid& pm = om.duo ? om.duo->pm_h : *om.pm;
  MonadMorH c;
  c.src = monoidal_product_monads(om.monad, om.monad);
  c.dst = om.monad;
  c.f = pm.mult;
  c.chi = *om.opmon_binary;
  c.name = om.name + "/mult";
  return c;
}

MonadMorH opmon_unit_hcell(const OidalMonad& om) {
  const Pseudomonoid& pm = om.duo ? om.duo->pm_h : *om.pm;
  MonadMorH c;
  c.src = identity_monad(terminal_category());
  c.dst = om.monad;
  c.f = pm.unit;
  c.chi = *om.opmon_nullary;
  c.name = om.name + "/unit";
  return c;
}

MonadMorV mon_mult_vcell(const OidalMonad& om) {
  const Pseudomonoid& pm = om.duo ? om.duo->pm_v : *om.pm;
  MonadMorV c;
  c.src = monoidal_product_monads(om.monad, om.monad);
  c.dst = om.monad;
  c.f = pm.mult;
  c.chi = *om.mon_binary;
  c.name = om.name + "/mult";
  return c;
}

MonadMorV mon_unit_vcell(const OidalMonad& om) {
  const Pseudomonoid& pm = om.duo ? om.duo->pm_v : *om.pm;
  MonadMorV c;
  c.src = identity_monad(terminal_category());
  c.dst = om.monad;
  c.f = pm.unit;
  c.chi = *om.mon_nullary;
  c.name = om.name + "/unit";
  return c;
}

namespace {

// The four compatibility diagrams of an opmonoidal monad structure.
void check_opmon_monad(ValidationReport& rep, const Monad& mo, const Pseudomonoid& pm,
                       const Nat& tau2, const Nat& tau0) {
  const Fun& t = mo.endo;
  Fun tt = product_fun(t, t);
  std::size_t n = pm.base->morphisms.size();
  DiagramChecker chk{rep, *pm.base};
  chk.equal("mult-binary", n, 2, [&] {
    Nat l = vcomp(whisker_left(pm.mult, product_nat(mo.mult, mo.mult)),
                  vcomp(whisker_right(tau2, tt), whisker_left(t, tau2)));
    Nat r = vcomp(tau2, whisker_right(mo.mult, pm.mult));
    return std::make_pair(l, r);
  });
  chk.equal("mult-nullary", n, 0, [&] {
    Nat l = vcomp(tau0, whisker_left(t, tau0));
    Nat r = vcomp(tau0, whisker_right(mo.mult, pm.unit));
    return std::make_pair(l, r);
  });
  chk.equal("unit-binary", n, 2, [&] {
    Nat l = vcomp(tau2, whisker_right(mo.unit, pm.mult));
    Nat r = whisker_left(pm.mult, product_nat(mo.unit, mo.unit));
    return std::make_pair(l, r);
  });
  chk.equal("unit-nullary", n, 0, [&] {
    Nat l = vcomp(tau0, whisker_right(mo.unit, pm.unit));
    Nat r = identity_nat(pm.unit);
    return std::make_pair(l, r);
  });
}

// Their duals, for a monoidal monad structure.
void check_mon_monad(ValidationReport& rep, const Monad& mo, const Pseudomonoid& pm,
                     const Nat& tau2, const Nat& tau0) {
  const Fun& t = mo.endo;
  Fun tt = product_fun(t, t);
  std::size_t n = pm.base->morphisms.size();
  DiagramChecker chk{rep, *pm.base};
  chk.equal("mult-binary", n, 2, [&] {
    Nat l = vcomp(whisker_right(mo.mult, pm.mult),
                  vcomp(whisker_left(t, tau2), whisker_right(tau2, tt)));
    Nat r = vcomp(tau2, whisker_left(pm.mult, product_nat(mo.mult, mo.mult)));
    return std::make_pair(l, r);
  });
  chk.equal("mult-nullary", n, 0, [&] {
    Nat l = vcomp(whisker_right(mo.mult, pm.unit), vcomp(whisker_left(t, tau0), tau0));
    return std::make_pair(l, tau0);
  });
  chk.equal("unit-binary", n, 2, [&] {
    Nat l = vcomp(tau2, whisker_left(pm.mult, product_nat(mo.unit, mo.unit)));
    Nat r = whisker_right(mo.unit, pm.mult);
    return std::make_pair(l, r);
  });
  chk.equal("unit-nullary", n, 0, [&] {
    return std::make_pair(tau0, whisker_right(mo.unit, pm.unit));
  });
}

// The four mixed compatibilities between the monoidal and opmonoidal axes
// of a (1,1) structure.
void check_mixed(ValidationReport& rep, const OidalMonad& om) {
  const Duoidal& d = *om.duo;
  const Fun& t = om.monad.endo;
  const Fun mh = d.pm_h.mult;
  const Fun mv = d.pm_v.mult;
  const Fun uh = d.pm_h.unit;
  const Fun uv = d.pm_v.unit;
  const Nat& tau2 = *om.mon_binary;
  const Nat& tau0 = *om.mon_nullary;
  const Nat& tau2o = *om.opmon_binary;
  const Nat& tau0o = *om.opmon_nullary;
  CatPtr a = om.monad.base;
  Fun mid = middle_flip(a, a);
  Fun mvv = compose_fun(product_fun(mv, mv), mid);
  std::size_t n = a->morphisms.size();
  DiagramChecker chk{rep, *a};

  chk.equal("interchange-binary", n, 4, [&] {
    Fun mhmh = product_fun(mh, mh);
    Fun t4 = product_fun(product_fun(t, t), product_fun(t, t));
    Nat l = vcomp(whisker_right(tau2o, mvv),
                  vcomp(whisker_left(t, d.xi), whisker_right(tau2, mhmh)));
    Nat r = vcomp(whisker_left(mh, whisker_right(product_nat(tau2, tau2), mid)),
                  vcomp(whisker_right(d.xi, t4), whisker_left(mv, product_nat(tau2o, tau2o))));
    return std::make_pair(l, r);
  });
  chk.equal("interchange-vert-unit", n, 0, [&] {
    Fun uvuv = product_fun(uv, uv);
    Nat l = vcomp(whisker_right(tau2o, uvuv), vcomp(whisker_left(t, d.xi0), tau0));
    Nat r = vcomp(whisker_left(mh, product_nat(tau0, tau0)), d.xi0);
    return std::make_pair(l, r);
  });
  chk.equal("interchange-hor-unit", n, 2, [&] {
    Fun uhuh = product_fun(uh, uh);
    Nat l = vcomp(tau0o, vcomp(whisker_left(t, d.xi_0), whisker_right(tau2, uhuh)));
    Nat r = vcomp(d.xi_0, whisker_left(mv, product_nat(tau0o, tau0o)));
    return std::make_pair(l, r);
  });
  chk.equal("interchange-units", n, 0, [&] {
    Nat l = vcomp(tau0o, vcomp(whisker_left(t, d.xi00), tau0));
    return std::make_pair(l, d.xi00);
  });
}

}  // namespace

ValidationReport validate_oidal_monad(const OidalMonad& om) {
  ValidationReport rep;
  rep.subject = "oidal monad " + om.name;
  rep.merge(validate_monad(om.monad));
  if (!rep.ok()) return rep;

  const bool has_mon = om.p == 1;
  const bool has_opmon = om.q == 1;
  if (om.p < 0 || om.q < 0 || om.p > 1 || om.q > 1) {
    rep.add("shape", "unsupported shape (" + std::to_string(om.p) + "," +
                         std::to_string(om.q) + ")");
    return rep;
  }
  if (has_mon != om.mon_binary.has_value() || has_mon != om.mon_nullary.has_value() ||
      has_opmon != om.opmon_binary.has_value() ||
      has_opmon != om.opmon_nullary.has_value()) {
    rep.add("shape", "structure cells do not match the declared shape");
    return rep;
  }
  if ((om.p + om.q == 1) != om.pm.has_value() || (om.p + om.q == 2) != om.duo.has_value()) {
    rep.add("shape", "base structure does not match the declared shape");
    return rep;
  }
  if (om.p + om.q == 0) return rep;

  if (om.duo) {
    rep.merge(validate_duoidal(*om.duo));
    if (!rep.ok()) return rep;
  } else if (*om.pm->base != *om.monad.base) {
    rep.add("shape", "pseudomonoid lives on a different base");
    return rep;
  }
  if (om.duo && *om.duo->pm_h.base != *om.monad.base) {
    rep.add("shape", "duoidal structure lives on a different base");
    return rep;
  }

  if (has_opmon) {
    const Pseudomonoid& pm = om.duo ? om.duo->pm_h : *om.pm;
    OpmonCell cell{pm, pm, om.monad.endo, *om.opmon_binary, *om.opmon_nullary,
                   om.name + "/endo"};
    ValidationReport r = validate_opmon_cell(cell);
    r.subject = "opmonoidal-endocell";
    rep.merge(r);
    if (rep.ok()) {
      ValidationReport r2;
      check_opmon_monad(r2, om.monad, pm, *om.opmon_binary, *om.opmon_nullary);
      r2.subject = "opmonoidal-compatibility";
      rep.merge(r2);
    }
  }
  if (has_mon) {
    const Pseudomonoid& pm = om.duo ? om.duo->pm_v : *om.pm;
    MonCell cell{pm, pm, om.monad.endo, *om.mon_binary, *om.mon_nullary, om.name + "/endo"};
    ValidationReport r = validate_mon_cell(cell);
    r.subject = "monoidal-endocell";
    rep.merge(r);
    if (rep.ok()) {
      ValidationReport r2;
      check_mon_monad(r2, om.monad, pm, *om.mon_binary, *om.mon_nullary);
      r2.subject = "monoidal-compatibility";
      rep.merge(r2);
    }
  }
  if (om.duo && rep.ok()) {
    ValidationReport r;
    check_mixed(r, om);
    r.subject = "mixed-compatibility";
    rep.merge(r);
  }
  return rep;
}

Pseudomonoid lift_along_u(EmContext& ctx, const OidalMonad& om) {
  if (om.q != 1 || om.p != 0)
    throw BoundaryError("lift_along_u expects a (0,1) structure, got (" +
                        std::to_string(om.p) + "," + std::to_string(om.q) + ")");
  require_valid(validate_oidal_monad(om));
  const Pseudomonoid& pm = *om.pm;
  const EMBundle& e = ctx.em(om.monad);

  MonadMorH mc = opmon_mult_hcell(om);
  MonadMorH uc = opmon_unit_hcell(om);
  MonadMorH idc = identity_mor_h(om.monad);

  Pseudomonoid out;
  out.base = e.em_cat;
  out.mult = H1(ctx, mc);
  out.unit = H1(ctx, uc);
  out.name = om.name + "^em";

  MonadMorH mm1 = compose_h(mc, product_mor(mc, idc));
  MonadMorH m1m = compose_h(mc, product_mor(idc, mc));
  MonadMorH mu1 = compose_h(mc, product_mor(uc, idc));
  MonadMorH m1u = compose_h(mc, product_mor(idc, uc));
  out.assoc = H2(ctx, MonadTransH{mm1, m1m, pm.assoc, om.name + "/assoc"});
  out.lunit = H2(ctx, MonadTransH{mu1, idc, pm.lunit, om.name + "/lunit"});
  out.runit = H2(ctx, MonadTransH{m1u, idc, pm.runit, om.name + "/runit"});

  // Forgetful-side lifting squares hold on the nose.
  if (compose_fun(e.forgetful, out.mult) !=
      compose_fun(pm.mult, product_fun(e.forgetful, e.forgetful)))
    throw EngineError("lift_along_u: forgetful square for the multiplication failed");
  if (compose_fun(e.forgetful, out.unit) != pm.unit)
    throw EngineError("lift_along_u: forgetful square for the unit failed");
  require_valid(validate_pseudomonoid(out));
  return out;
}

Pseudomonoid lift_along_f(EmContext& ctx, const OidalMonad& om) {
  if (om.p != 1 || om.q != 0)
    throw BoundaryError("lift_along_f expects a (1,0) structure, got (" +
                        std::to_string(om.p) + "," + std::to_string(om.q) + ")");
  require_valid(validate_oidal_monad(om));
  const Pseudomonoid& pm = *om.pm;
  const EMBundle& e = ctx.em(om.monad);

  MonadMorV mc = mon_mult_vcell(om);
  MonadMorV uc = mon_unit_vcell(om);
  MonadMorV idc = identity_mor_v(om.monad);

  Pseudomonoid out;
  out.base = e.em_cat;
  out.mult = ctx.v1(mc).fun;
  out.unit = ctx.v1(uc).fun;
  out.name = om.name + "^em";

  MonadMorV mm1 = compose_v(mc, product_mor(mc, idc));
  MonadMorV m1m = compose_v(mc, product_mor(idc, mc));
  MonadMorV mu1 = compose_v(mc, product_mor(uc, idc));
  MonadMorV m1u = compose_v(mc, product_mor(idc, uc));
  out.assoc = V2(ctx, MonadTransV{mm1, m1m, pm.assoc, om.name + "/assoc"});
  out.lunit = V2(ctx, MonadTransV{mu1, idc, pm.lunit, om.name + "/lunit"});
  out.runit = V2(ctx, MonadTransV{m1u, idc, pm.runit, om.name + "/runit"});
  require_valid(validate_pseudomonoid(out));
  return out;
}

std::vector<MndSquare> interchange_squares(const OidalMonad& om) {
  if (om.p != 1 || om.q != 1)
    throw BoundaryError("interchange_squares expects a (1,1) structure");
  const Duoidal& d = *om.duo;
  MonadMorH mch = opmon_mult_hcell(om);
  MonadMorH uch = opmon_unit_hcell(om);
  MonadMorV mcv = mon_mult_vcell(om);
  MonadMorV ucv = mon_unit_vcell(om);
  Monad unit_monad = identity_monad(terminal_category());

  // Middle flip as a vertical 1-cell on the fourfold product monad.
  Monad t4 = monoidal_product_monads(monoidal_product_monads(om.monad, om.monad),
                                     monoidal_product_monads(om.monad, om.monad));
  Fun mid = middle_flip(om.monad.base, om.monad.base);
  MonadMorV flip_cell;
  flip_cell.src = t4;
  flip_cell.dst = t4;
  flip_cell.f = mid;
  {
    std::map<Id, Id> comps;
    for (const Id& x : t4.base->objects)
      comps[x] = t4.base->id_of(t4.endo.ob(mid.ob(x)));
    flip_cell.chi = nat_from_components(compose_fun(mid, t4.endo),
                                        compose_fun(t4.endo, mid), comps);
  }
  flip_cell.name = "midflip";

  MndSquare sq_xi{product_mor(mch, mch), mch,
                  compose_v(product_mor(mcv, mcv), flip_cell), mcv, d.xi,
                  om.name + "/xi"};
  MndSquare sq_xi0{identity_mor_h(unit_monad), mch, product_mor(ucv, ucv), ucv, d.xi0,
                   om.name + "/xi0"};
  MndSquare sq_xi_0{product_mor(uch, uch), uch, identity_mor_v(unit_monad), mcv, d.xi_0,
                    om.name + "/xi_0"};
  MndSquare sq_xi00{identity_mor_h(unit_monad), uch, identity_mor_v(unit_monad), ucv,
                    d.xi00, om.name + "/xi00"};
  return {sq_xi, sq_xi0, sq_xi_0, sq_xi00};
}

Duoidal lift_duoidal(EmContext& ctx, const OidalMonad& om) {
  if (om.p != 1 || om.q != 1)
    throw BoundaryError("lift_duoidal expects a (1,1) structure, got (" +
                        std::to_string(om.p) + "," + std::to_string(om.q) + ")");
  require_valid(validate_oidal_monad(om));
  const Duoidal& d = *om.duo;
  const EMBundle& e = ctx.em(om.monad);

  OidalMonad op;  // the opmonoidal axis alone
  op.monad = om.monad;
  op.q = 1;
  op.pm = d.pm_h;
  op.opmon_binary = om.opmon_binary;
  op.opmon_nullary = om.opmon_nullary;
  op.name = om.name + "/h";
  OidalMonad mo;  // the monoidal axis alone
  mo.monad = om.monad;
  mo.p = 1;
  mo.pm = d.pm_v;
  mo.mon_binary = om.mon_binary;
  mo.mon_nullary = om.mon_nullary;
  mo.name = om.name + "/v";

  Duoidal out;
  out.pm_h = lift_along_u(ctx, op);
  out.pm_v = lift_along_f(ctx, mo);
  out.name = om.name + "^em";

  std::vector<MndSquare> sqs = interchange_squares(om);
  Nat kxi = K2(ctx, sqs[0]);
  Nat kxi0 = K2(ctx, sqs[1]);
  Nat kxi_0 = K2(ctx, sqs[2]);
  Nat kxi00 = K2(ctx, sqs[3]);

  // Rebase onto the tensor-shape boundaries; they must agree on the nose,
  // which the deterministic coequalizer choice guarantees on skeletal thin
  // fixtures.
  Fun mid_em = middle_flip(e.em_cat, e.em_cat);
  Fun mvv_em = compose_fun(product_fun(out.pm_v.mult, out.pm_v.mult), mid_em);
  auto rebase = [&](const Nat& k, const Fun& src, const Fun& dst, const char* which) {
    if (k.src != src || k.dst != dst)
      throw EngineError(std::string("lift_duoidal: lifted ") + which +
                        " does not match the tensor-shaped boundary exactly; this "
                        "requires a skeletal thin base");
    return nat_from_components(src, dst, k.components);
  };
  out.xi = rebase(kxi, compose_fun(out.pm_v.mult, product_fun(out.pm_h.mult, out.pm_h.mult)),
                  compose_fun(out.pm_h.mult, mvv_em), "xi");
  out.xi0 = rebase(kxi0, out.pm_v.unit,
                   compose_fun(out.pm_h.mult, product_fun(out.pm_v.unit, out.pm_v.unit)),
                   "xi0");
  out.xi_0 = rebase(kxi_0,
                    compose_fun(out.pm_v.mult, product_fun(out.pm_h.unit, out.pm_h.unit)),
                    out.pm_h.unit, "xi_0");
  out.xi00 = rebase(kxi00, out.pm_v.unit, out.pm_h.unit, "xi00");

  require_valid(validate_duoidal(out));
  return out;
}

DuoidalAlt duoidal_to_alt(const Duoidal& d) {
  DuoidalAlt a;
  a.pm_h = d.pm_h;
  a.pm_v = d.pm_v;
  Fun mid = middle_flip(d.pm_h.base, d.pm_h.base);
  a.zeta = whisker_right(d.xi, mid);
  a.xi0 = d.xi0;
  a.xi_0 = d.xi_0;
  a.xi00 = d.xi00;
  a.name = d.name + "~";
  return a;
}

Duoidal duoidal_from_alt(const DuoidalAlt& a) {
  Duoidal d;
  d.pm_h = a.pm_h;
  d.pm_v = a.pm_v;
  Fun mid = middle_flip(a.pm_h.base, a.pm_h.base);
  Nat back = whisker_right(a.zeta, mid);
  d.xi = nat_from_components(
      compose_fun(d.pm_v.mult, product_fun(d.pm_h.mult, d.pm_h.mult)),
      compose_fun(d.pm_h.mult, compose_fun(product_fun(d.pm_v.mult, d.pm_v.mult), mid)),
      back.components);
  d.xi0 = a.xi0;
  d.xi_0 = a.xi_0;
  d.xi00 = a.xi00;
  d.name = a.name.size() && a.name.back() == '~' ? a.name.substr(0, a.name.size() - 1)
                                                 : a.name;
  return d;
}

MndPseudomonoid oidal_to_mnd(const OidalMonad& om) {
  if (om.p != 0 || om.q != 1)
    throw BoundaryError("oidal_to_mnd expects a (0,1) structure");
  MndPseudomonoid mp;
  mp.monad = om.monad;
  mp.mult_cell = opmon_mult_hcell(om);
  mp.unit_cell = opmon_unit_hcell(om);
  MonadMorH idc = identity_mor_h(om.monad);
  mp.assoc = MonadTransH{compose_h(mp.mult_cell, product_mor(mp.mult_cell, idc)),
                         compose_h(mp.mult_cell, product_mor(idc, mp.mult_cell)),
                         om.pm->assoc, om.name + "/assoc"};
  mp.lunit = MonadTransH{compose_h(mp.mult_cell, product_mor(mp.unit_cell, idc)), idc,
                         om.pm->lunit, om.name + "/lunit"};
  mp.runit = MonadTransH{compose_h(mp.mult_cell, product_mor(idc, mp.unit_cell)), idc,
                         om.pm->runit, om.name + "/runit"};
  return mp;
}

OidalMonad oidal_from_mnd(const MndPseudomonoid& mp, const Pseudomonoid& pm) {
  OidalMonad om;
  om.monad = mp.monad;
  om.q = 1;
  om.pm = pm;
  om.opmon_binary = mp.mult_cell.chi;
  om.opmon_nullary = mp.unit_cell.chi;
  om.name = pm.name + "-monad";
  return om;
}

}  // namespace oidal
