#include "oidal/dblcat.hpp"

#include "oidal/oidal.hpp"

namespace oidal {

ValidationReport validate_sqr(const SqrCell& c) {
  ValidationReport rep;
  rep.subject = "square " + c.name;
  rep.merge(validate_functor(c.top));
  rep.merge(validate_functor(c.bottom));
  rep.merge(validate_functor(c.left));
  rep.merge(validate_functor(c.right));
  rep.merge(validate_nat(c.body));
  if (!rep.ok()) return rep;
  if (*c.top.src != *c.left.src || *c.top.dst != *c.right.src ||
      *c.bottom.src != *c.left.dst || *c.bottom.dst != *c.right.dst)
    rep.add("boundary", "edges do not close a square");
  else if (c.body.src != compose_fun(c.right, c.top) ||
           c.body.dst != compose_fun(c.bottom, c.left))
    rep.add("boundary", "body is not right.top -> bottom.left");
  return rep;
}

SqrCell sqr_hcomp(const SqrCell& right, const SqrCell& left) {
  if (left.right != right.left)
    throw BoundaryError("sqr_hcomp: shared vertical edge differs");
  SqrCell c;
  c.top = compose_fun(right.top, left.top);
  c.bottom = compose_fun(right.bottom, left.bottom);
  c.left = left.left;
  c.right = right.right;
  c.body = vcomp(whisker_left(right.bottom, left.body), whisker_right(right.body, left.top));
  c.name = right.name + "|" + left.name;
  return c;
}

SqrCell sqr_vcomp(const SqrCell& below, const SqrCell& above) {
  if (above.bottom != below.top)
    throw BoundaryError("sqr_vcomp: shared horizontal edge differs");
  SqrCell c;
  c.top = above.top;
  c.bottom = below.bottom;
  c.left = compose_fun(below.left, above.left);
  c.right = compose_fun(below.right, above.right);
  c.body = vcomp(whisker_right(below.body, above.left), whisker_left(below.right, above.body));
  c.name = below.name + "/" + above.name;
  return c;
}

SqrCell sqr_identity_h(const Fun& horizontal) {
  SqrCell c;
  c.top = c.bottom = horizontal;
  c.left = identity_fun(horizontal.src);
  c.right = identity_fun(horizontal.dst);
  c.body = identity_nat(horizontal);
  c.name = "1|" + horizontal.label;
  return c;
}

SqrCell sqr_identity_v(const Fun& vertical) {
  SqrCell c;
  c.left = c.right = vertical;
  c.top = identity_fun(vertical.src);
  c.bottom = identity_fun(vertical.dst);
  c.body = identity_nat(vertical);
  c.name = "1/" + vertical.label;
  return c;
}

ValidationReport validate_mnd_square(const MndSquare& s) {
  ValidationReport rep;
  rep.subject = "monad square " + s.name;
  rep.merge(validate_monad_mor(s.top));
  rep.merge(validate_monad_mor(s.bottom));
  rep.merge(validate_monad_mor(s.left));
  rep.merge(validate_monad_mor(s.right));
  rep.merge(validate_nat(s.body));
  if (!rep.ok()) return rep;

  if (!(s.top.src == s.left.src) || !(s.top.dst == s.right.src) ||
      !(s.bottom.src == s.left.dst) || !(s.bottom.dst == s.right.dst)) {
    rep.add("boundary", "edges do not close a square");
    return rep;
  }
  if (s.body.src != compose_fun(s.right.f, s.top.f) ||
      s.body.dst != compose_fun(s.bottom.f, s.left.f)) {
    rep.add("boundary", "body is not right.top -> bottom.left");
    return rep;
  }

  // Compatibility hexagon.
  Nat lhs = vcomp(whisker_left(s.bottom.f, s.left.chi),
                  vcomp(whisker_right(s.body, s.top.src.endo),
                        whisker_left(s.right.f, s.top.chi)));
  Nat rhs = vcomp(whisker_right(s.bottom.chi, s.left.f),
                  vcomp(whisker_left(s.right.dst.endo, s.body),
                        whisker_right(s.right.chi, s.top.f)));
  for (const Id& x : s.body.src.src->objects)
    if (lhs.at(x) != rhs.at(x)) {
      rep.add("hexagon", "at " + x);
      break;
    }
  return rep;
}

MndSquare mnd_hcomp(const MndSquare& right, const MndSquare& left) {
  if (!(left.right == right.left))
    throw BoundaryError("mnd_hcomp: shared vertical edge differs");
  MndSquare c;
  c.top = compose_h(right.top, left.top);
  c.bottom = compose_h(right.bottom, left.bottom);
  c.left = left.left;
  c.right = right.right;
  c.body = vcomp(whisker_left(right.bottom.f, left.body),
                 whisker_right(right.body, left.top.f));
  c.name = right.name + "|" + left.name;
  return c;
}

MndSquare mnd_vcomp(const MndSquare& below, const MndSquare& above) {
  if (!(above.bottom == below.top))
    throw BoundaryError("mnd_vcomp: shared horizontal edge differs");
  MndSquare c;
  c.top = above.top;
  c.bottom = below.bottom;
  c.left = compose_v(below.left, above.left);
  c.right = compose_v(below.right, above.right);
  c.body = vcomp(whisker_right(below.body, above.left.f),
                 whisker_left(below.right.f, above.body));
  c.name = below.name + "/" + above.name;
  return c;
}

MndSquare mnd_identity_h(const MonadMorH& m) {
  MndSquare c;
  c.top = c.bottom = m;
  c.left = identity_mor_v(m.src);
  c.right = identity_mor_v(m.dst);
  c.body = identity_nat(m.f);
  c.name = "1|" + m.name;
  return c;
}

MndSquare mnd_identity_v(const MonadMorV& m) {
  MndSquare c;
  c.left = c.right = m;
  c.top = identity_mor_h(m.src);
  c.bottom = identity_mor_h(m.dst);
  c.body = identity_nat(m.f);
  c.name = "1/" + m.name;
  return c;
}

MndSquare product_square(const MndSquare& a, const MndSquare& b) {
  MndSquare c;
  c.top = product_mor(a.top, b.top);
  c.bottom = product_mor(a.bottom, b.bottom);
  c.left = product_mor(a.left, b.left);
  c.right = product_mor(a.right, b.right);
  c.body = product_nat(a.body, b.body);
  c.name = a.name + "(x)" + b.name;
  return c;
}

MndSquare inclusion_square(const SqrCell& c) {
  MndSquare s;
  Monad mt = identity_monad(c.top.src);
  Monad mz = identity_monad(c.top.dst);
  Monad ms = identity_monad(c.bottom.src);
  Monad mv = identity_monad(c.bottom.dst);
  s.top = MonadMorH{mt, mz, c.top, identity_nat(c.top), c.top.label};
  s.bottom = MonadMorH{ms, mv, c.bottom, identity_nat(c.bottom), c.bottom.label};
  s.left = MonadMorV{mt, ms, c.left, identity_nat(c.left), c.left.label};
  s.right = MonadMorV{mz, mv, c.right, identity_nat(c.right), c.right.label};
  s.body = c.body;
  s.name = "incl(" + c.name + ")";
  return s;
}

Nat K2(EmContext& ctx, const MndSquare& s) {
  const EMBundle& et = ctx.em(s.top.src);
  const EMBundle& ev = ctx.em(s.bottom.dst);
  const EMBundle& es = ctx.em(s.bottom.src);
  Fun h_top = H1(ctx, s.top);
  Fun h_bot = H1(ctx, s.bottom);
  const V1Bundle& v_left = ctx.v1(s.left);
  const V1Bundle& v_right = ctx.v1(s.right);
  const FinCat& emv = *ev.em_cat;

  Nat out;
  out.src = compose_fun(v_right.fun, h_top);
  out.dst = compose_fun(h_bot, v_left.fun);
  out.label = "K(" + s.name + ")";

  for (const auto& [pn, p] : et.algebra_by_name) {
    Id hp = h_top.ob(pn);
    const Cocone& pi = v_right.pi.at(hp);
    // Composite to factor: H(bottom)(pi_left) . (free-side cell at left.f X) . f(body X).
    Id x = p.carrier;
    Id gx = s.right.f.ob(s.top.f.ob(x));
    Id nx = s.left.f.ob(x);
    Id step1 = ev.em_mor(s.bottom.dst.endo.mo(s.body.at(x)), ev.free.ob(gx),
                         ev.free.ob(s.bottom.f.ob(nx)));
    Id hfs_nx = h_bot.ob(es.free.ob(nx));
    Id step2 = ev.em_mor(s.bottom.chi.at(nx), ev.free.ob(s.bottom.f.ob(nx)), hfs_nx);
    Id step3 = h_bot.mo(v_left.pi.at(pn).leg);
    Id target = emv.compose(step3, emv.compose(step2, step1));
    // Serial commutativity: the composite must coequalize the defining pair.
    auto [l1, l2] = v_right.pairs.at(hp);
    if (emv.compose(target, l1) != emv.compose(target, l2))
      throw EngineError("square " + s.name + ": side composite does not coequalize at " +
                        pn + " (invalid square)");
    out.components[pn] = factor_through(emv, pi, target);
  }
  require_valid(validate_nat(out));
  return out;
}

MonadMorH counit_hcell(EmContext& ctx, const Monad& m) {
  const EMBundle& e = ctx.em(m);
  MonadMorH c;
  c.src = identity_monad(e.em_cat);
  c.dst = m;
  c.f = e.forgetful;
  c.chi = whisker_left(e.forgetful, e.counit);
  c.name = "u_" + m.name;
  return c;
}

MonadMorV free_vcell(EmContext& ctx, const Monad& m) {
  const EMBundle& e = ctx.em(m);
  MonadMorV c;
  c.src = m;
  c.dst = identity_monad(e.em_cat);
  c.f = e.free;
  c.chi = whisker_right(e.counit, e.free);
  c.name = "f_" + m.name;
  return c;
}

MndSquare counit_square(EmContext& ctx, const MonadMorV& g) {
  const EMBundle& et = ctx.em(g.src);
  const EMBundle& es = ctx.em(g.dst);
  const V1Bundle& v = ctx.v1(g);
  MndSquare s;
  s.top = counit_hcell(ctx, g.src);
  s.bottom = counit_hcell(ctx, g.dst);
  s.left = MonadMorV{identity_monad(et.em_cat), identity_monad(es.em_cat), v.fun,
                     identity_nat(v.fun), "V(" + g.name + ")"};
  s.right = g;
  std::map<Id, Id> comps;
  for (const auto& [pn, p] : et.algebra_by_name) {
    Id gx = g.f.ob(p.carrier);
    comps[pn] = g.dst.base->compose(es.forgetful.mo(v.pi.at(pn).leg),
                                    g.dst.unit.at(gx));
  }
  s.body = nat_from_components(compose_fun(g.f, et.forgetful),
                               compose_fun(es.forgetful, v.fun), comps);
  s.name = "counit(" + g.name + ")";
  return s;
}

Nat free_side_cell(EmContext& ctx, const MonadMorH& h) {
  const EMBundle& et = ctx.em(h.src);
  const EMBundle& es = ctx.em(h.dst);
  Fun hh = H1(ctx, h);
  std::map<Id, Id> comps;
  for (const Id& x : h.src.base->objects) {
    Id hx = h.f.ob(x);
    Id htx = h.f.ob(h.src.endo.ob(x));
    Id step1 = es.em_mor(h.dst.endo.mo(h.f.mo(h.src.unit.at(x))), es.free.ob(hx),
                         es.free.ob(htx));
    Id step2 = es.counit.at(hh.ob(et.free.ob(x)));
    comps[x] = es.em_cat->compose(step2, step1);
  }
  return nat_from_components(compose_fun(es.free, h.f), compose_fun(hh, et.free), comps);
}

MndSquare free_side_square(EmContext& ctx, const MonadMorH& h) {
  const EMBundle& et = ctx.em(h.src);
  const EMBundle& es = ctx.em(h.dst);
  Fun hh = H1(ctx, h);
  MndSquare s;
  s.top = h;
  s.bottom = MonadMorH{identity_monad(et.em_cat), identity_monad(es.em_cat), hh,
                       identity_nat(hh), "H(" + h.name + ")"};
  s.left = free_vcell(ctx, h.src);
  s.right = free_vcell(ctx, h.dst);
  s.body = free_side_cell(ctx, h);
  s.name = "free(" + h.name + ")";
  return s;
}

MndSquare counit_modification(EmContext& ctx, const Monad& m) {
  const EMBundle& e = ctx.em(m);
  Monad triv = identity_monad(e.em_cat);
  MndSquare s;
  s.top = counit_hcell(ctx, m);
  s.bottom = identity_mor_h(triv);
  s.left = identity_mor_v(triv);
  s.right = free_vcell(ctx, m);
  s.body = e.counit;
  s.name = "eps(" + m.name + ")";
  return s;
}

MndSquare unit_modification(EmContext& ctx, const Monad& m) {
  const EMBundle& e = ctx.em(m);
  MndSquare s;
  s.top = identity_mor_h(m);
  s.bottom = counit_hcell(ctx, m);
  s.left = free_vcell(ctx, m);
  s.right = identity_mor_v(m);
  s.body = e.unit;
  s.name = "eta(" + m.name + ")";
  return s;
}

bool orthogonal_triangles(EmContext& ctx, const Monad& m) {
  MndSquare e = counit_modification(ctx, m);
  MndSquare n = unit_modification(ctx, m);
  if (!validate_mnd_square(e).ok() || !validate_mnd_square(n).ok()) return false;

  MndSquare t1 = mnd_hcomp(n, e);
  for (const auto& [x, c] : t1.body.components)
    if (!t1.body.src.dst->is_identity(c)) return false;
  MndSquare t2 = mnd_vcomp(e, n);
  for (const auto& [x, c] : t2.body.components)
    if (!t2.body.src.dst->is_identity(c)) return false;
  return true;
}

bool counit_naturality(EmContext& ctx, const MndSquare& s) {
  // Include the square's image under the EM action back into the monad
  // double category with trivial monads.
  Nat k = K2(ctx, s);
  const EMBundle& et = ctx.em(s.top.src);
  const EMBundle& ez = ctx.em(s.top.dst);
  const EMBundle& es = ctx.em(s.bottom.src);
  const EMBundle& ev = ctx.em(s.bottom.dst);
  MndSquare image;
  image.top = MonadMorH{identity_monad(et.em_cat), identity_monad(ez.em_cat),
                        H1(ctx, s.top), identity_nat(H1(ctx, s.top)), "H(top)"};
  image.bottom = MonadMorH{identity_monad(es.em_cat), identity_monad(ev.em_cat),
                           H1(ctx, s.bottom), identity_nat(H1(ctx, s.bottom)), "H(bottom)"};
  image.left = MonadMorV{identity_monad(et.em_cat), identity_monad(es.em_cat),
                         ctx.v1(s.left).fun, identity_nat(ctx.v1(s.left).fun), "V(left)"};
  image.right = MonadMorV{identity_monad(ez.em_cat), identity_monad(ev.em_cat),
                          ctx.v1(s.right).fun, identity_nat(ctx.v1(s.right).fun),
                          "V(right)"};
  image.body = k;
  image.name = "K(" + s.name + ")";

  MndSquare lhs = mnd_hcomp(counit_square(ctx, s.right), image);
  MndSquare rhs = mnd_hcomp(s, counit_square(ctx, s.left));
  return lhs == rhs;
}

ValidationReport em_in_M10_check(EmContext& ctx, const OidalMonad& om) {
  ValidationReport rep;
  rep.subject = "em-in-monoidal-cells " + om.name;
  if (om.p != 1 || om.q != 0) {
    rep.add("shape", "expects a (1,0) structure");
    return rep;
  }
  rep.merge(validate_oidal_monad(om));
  if (!rep.ok()) return rep;

  Pseudomonoid lifted = lift_along_f(ctx, om);
  ValidationReport lrep = validate_pseudomonoid(lifted);
  lrep.subject = "lifted-pseudomonoid";
  rep.merge(lrep);

  LemmaVOutcome mult_out = lemma_v_check(ctx, mon_mult_vcell(om));
  if (!mult_out.ok) rep.add("free-square-mult", mult_out.detail);
  LemmaVOutcome unit_out = lemma_v_check(ctx, mon_unit_vcell(om));
  if (!unit_out.ok) rep.add("free-square-unit", unit_out.detail);

  // The forgetful 1-cell is monoidal from the lifted structure to the base.
  const EMBundle& e = ctx.em(om.monad);
  MndSquare sq_mult = counit_square(ctx, mon_mult_vcell(om));
  MndSquare sq_unit = counit_square(ctx, mon_unit_vcell(om));
  MonCell forgetful_cell{lifted, *om.pm, e.forgetful, sq_mult.body, sq_unit.body,
                         "forgetful(" + om.name + ")"};
  ValidationReport frep = validate_mon_cell(forgetful_cell);
  frep.subject = "forgetful-monoidal";
  rep.merge(frep);
  return rep;
}

}  // namespace oidal
