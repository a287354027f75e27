#include "oidal/em.hpp"

#include <algorithm>

namespace oidal {

namespace {

const std::string kL = "\xe2\x9f\xa8";    // left angle bracket
const std::string kR = "\xe2\x9f\xa9";    // right angle bracket
const std::string kArrow = "\xe2\x86\x92";

std::string wrap_algebra(const std::string& carrier, const std::string& action) {
  return kL + carrier + "|" + action + kR;
}

std::string wrap_mor(const std::string& f, const std::string& src, const std::string& dst) {
  return kL + f + "|" + src + kArrow + dst + kR;
}

}  // namespace

std::string name_algebra(const FinCat& base, const Id& carrier, const Id& action) {
  Id idc = base.id_of(carrier);
  if (action == idc) return carrier;
  auto cs = name_components(carrier);
  if (cs.size() <= 1) return wrap_algebra(carrier, action);
  auto as = name_components(action);
  auto ids = name_components(idc);
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < cs.size(); ++i)
    parts.push_back(as[i] == ids[i] ? cs[i] : wrap_algebra(cs[i], as[i]));
  return make_tuple_name(parts);
}

namespace {

// Componentwise EM-morphism naming; collapsed legs (algebra named by its
// carrier) keep the base morphism name so that identity monads reproduce
// their base category on the nose.
std::string name_em_mor(const Id& f, const Id& src_obj,
                        const Id& src_carrier, const Id& dst_obj, const Id& dst_carrier) {
  auto fs = name_components(f);
  if (fs.size() <= 1) {
    if (src_obj == src_carrier && dst_obj == dst_carrier) return f;
    return wrap_mor(f, src_obj, dst_obj);
  }
  auto ss = name_components(src_obj);
  auto scs = name_components(src_carrier);
  auto ds = name_components(dst_obj);
  auto dcs = name_components(dst_carrier);
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (ss[i] == scs[i] && ds[i] == dcs[i])
      parts.push_back(fs[i]);
    else
      parts.push_back(wrap_mor(fs[i], ss[i], ds[i]));
  }
  return make_tuple_name(parts);
}

}  // namespace

const Algebra& EMBundle::algebra(const Id& em_obj) const {
  auto it = algebra_by_name.find(em_obj);
  if (it == algebra_by_name.end())
    throw BoundaryError("no algebra named " + em_obj + " over " + monad.name);
  return it->second;
}

Id EMBundle::em_mor(const Id& base_mor, const Id& src, const Id& dst) const {
  auto it = mor_index.find({base_mor, src, dst});
  if (it == mor_index.end())
    throw BoundaryError("no algebra morphism over " + base_mor + " : " + src + " -> " +
                        dst + " in em(" + monad.name + ")");
  return it->second;
}

EMBundle build_em(const Monad& m) {
  const FinCat& a = *m.base;
  EMBundle e;
  e.monad = m;

  std::vector<std::pair<Id, Algebra>> algs;  // (name, algebra)
  for (const Id& x : a.objects) {
    Id tx = m.endo.ob(x);
    for (const Id& act : a.hom(tx, x)) {
      if (a.compose(act, m.mult.at(x)) != a.compose(act, m.endo.mo(act))) continue;
      if (a.compose(act, m.unit.at(x)) != a.id_of(x)) continue;
      Algebra alg{x, act};
      algs.push_back({name_algebra(a, x, act), alg});
    }
  }

  std::map<Id, std::vector<std::pair<Id, Algebra>>> algs_on;  // carrier -> algebras
  for (const auto& [n, alg] : algs) algs_on[alg.carrier].push_back({n, alg});

  std::size_t predicted = 0;
  for (const Mor& f : a.morphisms)
    predicted += algs_on[f.src].size() * algs_on[f.dst].size();
  require_under_cap(predicted, "em(" + m.name + ")");

  std::vector<Id> objs;
  for (const auto& [n, alg] : algs) {
    objs.push_back(n);
    e.algebra_by_name[n] = alg;
  }

  std::vector<Mor> mors;
  for (const Mor& f : a.morphisms) {
    for (const auto& [pn, p] : algs_on[f.src]) {
      for (const auto& [qn, q] : algs_on[f.dst]) {
        if (a.compose(f.name, p.action) != a.compose(q.action, m.endo.mo(f.name)))
          continue;
        Id name = name_em_mor(f.name, pn, p.carrier, qn, q.carrier);
        mors.push_back({name, pn, qn});
        e.mor_index[{f.name, pn, qn}] = name;
      }
    }
  }

  std::map<Id, Id> ids;
  for (const auto& [pn, p] : algs) ids[pn] = e.em_mor(a.id_of(p.carrier), pn, pn);

  std::map<Id, Id> base_of;  // em mor -> base mor
  for (const auto& [key, name] : e.mor_index) base_of[name] = std::get<0>(key);
  std::map<std::pair<Id, Id>, Id> table;
  for (const Mor& f : mors) {
    for (const Mor& g : mors) {
      if (g.src != f.dst) continue;
      Id comp = a.compose(base_of[g.name], base_of[f.name]);
      table[{g.name, f.name}] = e.em_mor(comp, f.src, g.dst);
    }
  }

  e.em_cat = FinCat::make("em(" + m.name + ")", std::move(objs), std::move(mors),
                          std::move(ids), std::move(table));

  e.forgetful.src = e.em_cat;
  e.forgetful.dst = m.base;
  e.forgetful.label = "u_" + m.name;
  for (const auto& [pn, p] : e.algebra_by_name) e.forgetful.obj_map[pn] = p.carrier;
  for (const auto& [key, name] : e.mor_index) e.forgetful.mor_map[name] = std::get<0>(key);

  e.free.src = m.base;
  e.free.dst = e.em_cat;
  e.free.label = "f_" + m.name;
  for (const Id& x : a.objects)
    e.free.obj_map[x] = name_algebra(a, m.endo.ob(x), m.mult.at(x));
  for (const Mor& f : a.morphisms)
    e.free.mor_map[f.name] =
        e.em_mor(m.endo.mo(f.name), e.free.obj_map[f.src], e.free.obj_map[f.dst]);

  e.unit.src = identity_fun(m.base);
  e.unit.dst = compose_fun(e.forgetful, e.free);
  e.unit.label = "eta_" + m.name;
  e.unit.components = m.unit.components;

  e.counit.src = compose_fun(e.free, e.forgetful);
  e.counit.dst = identity_fun(e.em_cat);
  e.counit.label = "eps_" + m.name;
  for (const auto& [pn, p] : e.algebra_by_name)
    e.counit.components[pn] = e.em_mor(p.action, e.free.ob(p.carrier), pn);

  return e;
}

ValidationReport validate_em(const EMBundle& e) {
  ValidationReport rep;
  rep.subject = "em(" + e.monad.name + ")";
  rep.merge(validate_category(*e.em_cat));
  rep.merge(validate_functor(e.forgetful));
  rep.merge(validate_functor(e.free));
  rep.merge(validate_nat(e.unit));
  rep.merge(validate_nat(e.counit));
  if (!rep.ok()) return rep;

  const FinCat& a = *e.monad.base;

  if (compose_fun(e.forgetful, e.free) != e.monad.endo)
    rep.add("generated-monad", "u.f differs from the endofunctor");
  if (e.unit.components != e.monad.unit.components)
    rep.add("generated-monad", "adjunction unit differs from the monad unit");
  Nat mid = whisker_left(e.forgetful, whisker_right(e.counit, e.free));
  for (const Id& x : a.objects)
    if (mid.at(x) != e.monad.mult.at(x))
      rep.add("generated-monad", "u.eps.f vs mult at " + x);

  // Triangle identities.
  for (const Id& x : a.objects) {
    Id lhs = e.em_cat->compose(e.counit.at(e.free.ob(x)), e.free.mo(e.unit.at(x)));
    if (lhs != e.em_cat->id_of(e.free.ob(x))) rep.add("triangle-free", "at " + x);
  }
  for (const auto& [pn, p] : e.algebra_by_name) {
    Id lhs = a.compose(e.forgetful.mo(e.counit.at(pn)), e.unit.at(p.carrier));
    if (lhs != a.id_of(p.carrier)) rep.add("triangle-forgetful", "at " + pn);
  }

  // Algebra laws and exhaustiveness of the enumeration.
  for (const auto& [pn, p] : e.algebra_by_name) {
    if (a.compose(p.action, e.monad.mult.at(p.carrier)) !=
        a.compose(p.action, e.monad.endo.mo(p.action)))
      rep.add("algebra-associativity", pn);
    if (a.compose(p.action, e.monad.unit.at(p.carrier)) != a.id_of(p.carrier))
      rep.add("algebra-unit", pn);
  }
  std::size_t count = 0;
  for (const Id& x : a.objects) {
    Id tx = e.monad.endo.ob(x);
    for (const Id& act : a.hom(tx, x)) {
      if (a.compose(act, e.monad.mult.at(x)) != a.compose(act, e.monad.endo.mo(act)))
        continue;
      if (a.compose(act, e.monad.unit.at(x)) != a.id_of(x)) continue;
      ++count;
      if (!e.algebra_by_name.count(name_algebra(a, x, act)))
        rep.add("algebra-enumeration", "missing (" + x + "," + act + ")");
    }
  }
  if (count != e.algebra_by_name.size()) rep.add("algebra-enumeration", "count mismatch");

  // Morphisms are exactly the action-compatible base morphisms.
  for (const Mor& m : e.em_cat->morphisms) {
    const Algebra& p = e.algebra(m.src);
    const Algebra& q = e.algebra(m.dst);
    Id f = e.forgetful.mo(m.name);
    if (a.compose(f, p.action) != a.compose(q.action, e.monad.endo.mo(f)))
      rep.add("morphism-compatibility", m.name);
  }
  return rep;
}

const EMBundle& EmContext::em(const Monad& m) {
  for (const auto& [k, v] : em_cache_)
    if (k == m) return *v;
  auto bundle = std::make_shared<EMBundle>(build_em(m));
  require_valid(validate_em(*bundle));
  em_cache_.push_back({m, bundle});
  return *bundle;
}

Fun H1(EmContext& ctx, const MonadMorH& m) {
  const EMBundle& es = ctx.em(m.src);
  const EMBundle& et = ctx.em(m.dst);
  const FinCat& b = *m.dst.base;
  Fun h;
  h.src = es.em_cat;
  h.dst = et.em_cat;
  h.label = "H(" + m.name + ")";
  for (const auto& [pn, p] : es.algebra_by_name) {
    Id carrier = m.f.ob(p.carrier);
    Id action = b.compose(m.f.mo(p.action), m.chi.at(p.carrier));
    Id name = name_algebra(b, carrier, action);
    if (!et.algebra_by_name.count(name))
      throw EngineError("H(" + m.name + "): lifted action at " + pn +
                        " violates the algebra laws (invalid chi)");
    h.obj_map[pn] = name;
  }
  for (const Mor& e : es.em_cat->morphisms)
    h.mor_map[e.name] =
        et.em_mor(m.f.mo(es.forgetful.mo(e.name)), h.obj_map[e.src], h.obj_map[e.dst]);
  return h;
}

Nat H2(EmContext& ctx, const MonadTransH& t) {
  Fun hs = H1(ctx, t.src);
  Fun hd = H1(ctx, t.dst);
  const EMBundle& es = ctx.em(t.src.src);
  const EMBundle& et = ctx.em(t.src.dst);
  Nat n;
  n.src = hs;
  n.dst = hd;
  n.label = "H(" + t.name + ")";
  for (const auto& [pn, p] : es.algebra_by_name)
    n.components[pn] = et.em_mor(t.omega.at(p.carrier), hs.ob(pn), hd.ob(pn));
  require_valid(validate_nat(n));
  return n;
}

const V1Bundle& EmContext::v1(const MonadMorV& m) {
  for (const auto& [k, v] : v_cache_)
    if (k == m) return *v;

  const EMBundle& et = em(m.src);
  const EMBundle& es = em(m.dst);
  const Fun& t = m.src.endo;
  const Fun& s = m.dst.endo;

  auto bundle = std::make_shared<V1Bundle>();
  bundle->cell = m;
  bundle->fun.src = et.em_cat;
  bundle->fun.dst = es.em_cat;
  bundle->fun.label = "V(" + m.name + ")";

  for (const auto& [pn, p] : et.algebra_by_name) {
    Id htx = m.f.ob(t.ob(p.carrier));   // h(tX)
    Id hx = m.f.ob(p.carrier);          // h(X)
    Id dom = es.free.ob(htx);
    Id cod = es.free.ob(hx);
    // free action leg: f^s h(a)
    Id leg1 = es.em_mor(s.mo(m.f.mo(p.action)), dom, cod);
    // structure leg: counit at free . f^s(chi)
    Id shx = s.ob(hx);
    Id mid = es.free.ob(shx);
    Id step1 = es.em_mor(s.mo(m.chi.at(p.carrier)), dom, mid);
    Id step2 = es.em_mor(m.dst.mult.at(hx), mid, cod);
    Id leg2 = es.em_cat->compose(step2, step1);
    bundle->pairs[pn] = {leg1, leg2};
    auto coeq = coequalizer(*es.em_cat, leg1, leg2);
    if (!coeq)
      throw CoequalizerMissing("V(" + m.name + "): no coequalizer at algebra " + pn);
    bundle->pi[pn] = *coeq;
    bundle->fun.obj_map[pn] = coeq->apex;
  }
  for (const Mor& e : et.em_cat->morphisms) {
    Id phi = et.forgetful.mo(e.name);
    Id lifted = es.em_mor(s.mo(m.f.mo(phi)), es.free.ob(m.f.ob(et.algebra(e.src).carrier)),
                          es.free.ob(m.f.ob(et.algebra(e.dst).carrier)));
    Id target = es.em_cat->compose(bundle->pi.at(e.dst).leg, lifted);
    bundle->fun.mor_map[e.name] =
        factor_through(*es.em_cat, bundle->pi.at(e.src), target);
  }
  require_valid(validate_functor(bundle->fun));
  v_cache_.push_back({m, bundle});
  return *v_cache_.back().second;
}

Nat V2(EmContext& ctx, const MonadTransV& t) {
  const V1Bundle& vs = ctx.v1(t.src);
  const V1Bundle& vd = ctx.v1(t.dst);
  const EMBundle& et = ctx.em(t.src.src);
  const EMBundle& es = ctx.em(t.src.dst);
  Nat n;
  n.src = vs.fun;
  n.dst = vd.fun;
  n.label = "V(" + t.name + ")";
  for (const auto& [pn, p] : et.algebra_by_name) {
    Id moved = es.em_mor(t.src.dst.endo.mo(t.omega.at(p.carrier)),
                         es.free.ob(t.src.f.ob(p.carrier)),
                         es.free.ob(t.dst.f.ob(p.carrier)));
    Id target = es.em_cat->compose(vd.pi.at(pn).leg, moved);
    n.components[pn] = factor_through(*es.em_cat, vs.pi.at(pn), target);
  }
  require_valid(validate_nat(n));
  return n;
}

LemmaVOutcome lemma_v_check(EmContext& ctx, const MonadMorV& m) {
  LemmaVOutcome out;
  const V1Bundle& v = ctx.v1(m);
  const EMBundle& et = ctx.em(m.src);
  const EMBundle& es = ctx.em(m.dst);
  const FinCat& a = *m.src.base;
  const Fun& s = m.dst.endo;
  std::map<Id, Id> comparison;  // component of V(m).free -> free.m at each x

  for (const Id& x : a.objects) {
    Id pn = et.free.ob(x);  // the free algebra on x
    auto [leg1, leg2] = v.pairs.at(pn);
    Id hx = m.f.ob(x);
    Id htx = m.f.ob(m.src.endo.ob(x));
    // Split cocone: apex f^s(hX), leg = mult at hX . s(chi at X).
    Id dom = es.free.ob(htx);
    Id mid = es.free.ob(s.ob(hx));
    Id apex = es.free.ob(hx);
    Id leg = es.em_cat->compose(es.em_mor(m.dst.mult.at(hx), mid, apex),
                                es.em_mor(s.mo(m.chi.at(x)), dom, mid));
    Cocone split{apex, leg};
    // Sections witnessing the split presentation.
    Id pair_src = es.em_cat->mor(leg1).src;
    Id sec1 = es.em_mor(s.mo(m.f.mo(m.src.endo.mo(m.src.unit.at(x)))), dom, pair_src);
    Id sec2 = es.em_mor(s.mo(m.f.mo(m.src.unit.at(x))), apex, dom);
    if (!is_split_coequalizer(*es.em_cat, leg1, leg2, split, sec1, sec2)) {
      out.ok = false;
      out.detail = "split presentation fails at " + x;
      return out;
    }
    Comparison cmp = canonical_comparison(*es.em_cat, v.pi.at(pn), split);
    comparison[x] = cmp.fwd;
    if (!cmp.identity) {
      out.exact = false;
      if (out.detail.empty())
        out.detail = "comparison at " + x + " is " + cmp.fwd + " (not an identity)";
    }
  }
  // Consequence: composing the lifted cell with the free side agrees with
  // the free side of the cell itself, through a natural comparison family.
  try {
    Nat consequence = nat_from_components(compose_fun(v.fun, et.free),
                                          compose_fun(es.free, m.f), comparison);
    (void)consequence;
  } catch (const EngineError& e) {
    out.ok = false;
    out.detail = std::string("free-side square comparison is not natural: ") + e.what();
  }
  return out;
}

bool unit_coequalizer_check(EmContext& ctx, const Monad& m) {
  const EMBundle& e = ctx.em(m);
  for (const auto& [pn, p] : e.algebra_by_name) {
    Id fx = e.free.ob(p.carrier);
    Id ftx = e.free.ob(m.endo.ob(p.carrier));
    Id leg1 = e.em_mor(m.endo.mo(p.action), ftx, fx);       // free action
    Id leg2 = e.em_mor(m.mult.at(p.carrier), ftx, fx);      // counit at free
    Cocone counit_cocone{pn, e.counit.at(pn)};
    if (!cocone_universal(*e.em_cat, leg1, leg2, counit_cocone)) return false;
  }
  return true;
}

bool comparison_is_identity(EmContext& ctx, const Monad& t, const Monad& s) {
  const EMBundle& et = ctx.em(t);
  const EMBundle& es = ctx.em(s);
  Monad ts = monoidal_product_monads(t, s);
  const EMBundle& ets = ctx.em(ts);

  CatPtr prod_em = product(et.em_cat, es.em_cat);
  if (*prod_em != *ets.em_cat) return false;

  // Comparison induced by the adjunction (free (x) free) -| (u (x) u): sends a
  // pair of algebras to the algebra on the underlying pair whose action is
  // the pair of counits.
  Fun u2 = product_fun(et.forgetful, es.forgetful);
  Nat eps2 = product_nat(et.counit, es.counit);
  Fun k;
  k.src = prod_em;
  k.dst = ets.em_cat;
  k.label = "comparison";
  for (const Id& pq : prod_em->objects) {
    Id carrier = u2.ob(pq);
    Id action = u2.mo(eps2.at(pq));
    k.obj_map[pq] = name_algebra(*ts.base, carrier, action);
  }
  for (const Mor& mm : prod_em->morphisms)
    k.mor_map[mm.name] = ets.em_mor(u2.mo(mm.name), k.obj_map[mm.src], k.obj_map[mm.dst]);
  return k == identity_fun(ets.em_cat);
}

}  // namespace oidal
