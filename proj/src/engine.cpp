#include "oidal/engine.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

namespace oidal {

using nlohmann::ordered_json;

namespace {

// Runs one law entry, converting exceptions into failures.
void entry(LawReport& rep, const std::string& claim,
           const std::function<void(LawReport&, const std::string&)>& body) {
  try {
    body(rep, claim);
  } catch (const std::exception& e) {
    rep.fail(claim, e.what());
  }
}

/// Canonical comparison family from the chosen coequalizers of `cell` onto a
/// stated target functor with explicit cocone legs; returns the natural
/// family of comparison isomorphisms.
Nat comparison_nat(EmContext& ctx, const MonadMorV& cell, const Fun& target,
                   const std::function<Id(const Id&)>& leg) {
  const V1Bundle& v = ctx.v1(cell);
  const EMBundle& et = ctx.em(cell.src);
  const FinCat& em_dst = *ctx.em(cell.dst).em_cat;
  std::map<Id, Id> comps;
  for (const Id& pn : et.em_cat->objects) {
    Cocone canonical{target.ob(pn), leg(pn)};
    auto [l1, l2] = v.pairs.at(pn);
    if (!coequalizes(em_dst, l1, l2, canonical))
      throw FactorError("canonical cocone at " + pn + " does not coequalize");
    comps[pn] = canonical_comparison(em_dst, v.pi.at(pn), canonical).fwd;
  }
  return nat_from_components(v.fun, target, comps);
}

bool comparison_identity(const Nat& n) {
  for (const auto& [x, c] : n.components)
    if (!n.src.dst->is_identity(c)) return false;
  return true;
}

/// V-identity: chosen action of the identity vertical cell vs the identity
/// functor, compared through the counit cocones.
Nat v_identity_comparison(EmContext& ctx, const Monad& m) {
  const EMBundle& e = ctx.em(m);
  return comparison_nat(ctx, identity_mor_v(m), identity_fun(e.em_cat),
                        [&](const Id& pn) { return e.counit.at(pn); });
}

/// V-composition: chosen action of g.f vs V(g).V(f), compared through the
/// composite cocone legs.
Nat v_composite_comparison(EmContext& ctx, const MonadMorV& g, const MonadMorV& f) {
  const V1Bundle& vf = ctx.v1(f);
  const V1Bundle& vg = ctx.v1(g);
  const EMBundle& es = ctx.em(f.dst);
  const EMBundle& ez = ctx.em(g.dst);
  const EMBundle& et = ctx.em(f.src);
  MonadMorV gf = compose_v(g, f);
  Fun target = compose_fun(vg.fun, vf.fun);
  return comparison_nat(ctx, gf, target, [&](const Id& pn) {
    const Algebra& p = et.algebra(pn);
    Id hx = f.f.ob(p.carrier);
    Id khx = g.f.ob(hx);
    Id step1 = ez.em_mor(g.dst.endo.mo(g.f.mo(f.dst.unit.at(hx))), ez.free.ob(khx),
                         ez.free.ob(g.f.ob(f.dst.endo.ob(hx))));
    Id step2 = vg.pi.at(es.free.ob(hx)).leg;
    Id step3 = vg.fun.mo(vf.pi.at(pn).leg);
    return ez.em_cat->compose(step3, ez.em_cat->compose(step2, step1));
  });
}

Nat v_tensor_comparison(EmContext& ctx, const MonadMorV& f, const MonadMorV& g) {
  const V1Bundle& vf = ctx.v1(f);
  const V1Bundle& vg = ctx.v1(g);
  const EMBundle& etf = ctx.em(f.src);
  const EMBundle& etg = ctx.em(g.src);
  MonadMorV fg = product_mor(f, g);
  Fun target = product_fun(vf.fun, vg.fun);
  return comparison_nat(ctx, fg, target, [&](const Id& pn) {
    auto [p1, p2] = split_pair(*etf.em_cat, *etg.em_cat, pn, false);
    return pair_name(vf.pi.at(p1).leg, vg.pi.at(p2).leg);
  });
}

Nat v_symmetry_comparison(EmContext& ctx, const Monad& t, const Monad& s) {
  const EMBundle& et = ctx.em(t);
  const EMBundle& es = ctx.em(s);
  MonadMorV sym = symmetry_monad_cell_v(t, s);
  Fun target = flip(et.em_cat, es.em_cat);
  return comparison_nat(ctx, sym, target, [&](const Id& pn) {
    auto [p1, p2] = split_pair(*et.em_cat, *es.em_cat, pn, false);
    return pair_name(es.counit.at(p2), et.counit.at(p1));
  });
}

void compare_with_fallback(LawReport& rep, const std::string& claim, bool exact,
                           const std::function<Nat()>& build_comparison) {
  if (exact) {
    rep.exact(claim);
    return;
  }
  Nat c = build_comparison();
  if (comparison_identity(c))
    rep.exact(claim, "comparison degenerate");
  else
    rep.upto(claim, "canonical comparison " + c.label);
}

std::vector<Nat> collect_nats(const FixtureSet& fs) {
  std::vector<Nat> nats;
  for (const auto& [n, a] : fs.nats) nats.push_back(a);
  for (const auto& [n, m] : fs.monads) {
    nats.push_back(m.mult);
    nats.push_back(m.unit);
    nats.push_back(identity_nat(m.endo));
  }
  for (const auto& [n, m] : fs.hmors) nats.push_back(m.chi);
  for (const auto& [n, m] : fs.vmors) nats.push_back(m.chi);
  return nats;
}

SqrCell nat_square(const Nat& a) {
  SqrCell s;
  s.top = a.src;
  s.bottom = a.dst;
  s.left = identity_fun(a.src.src);
  s.right = identity_fun(a.src.dst);
  s.body = a;
  s.name = a.label;
  return s;
}

}  // namespace

DerivedCells derive_cells(const FixtureSet& fs) {
  DerivedCells d;
  for (const auto& [n, om] : fs.oidal_monads) {
    if (om.q == 1) {
      d.hmors.push_back(opmon_mult_hcell(om));
      d.hmors.push_back(opmon_unit_hcell(om));
    }
    if (om.p == 1) {
      d.vmors.push_back(mon_mult_vcell(om));
      d.vmors.push_back(mon_unit_vcell(om));
    }
    if (om.p == 1 && om.q == 1) {
      for (MndSquare& s : interchange_squares(om)) d.squares.push_back(s);
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Suites

LawReport sqr_suite(EmContext& ctx, const FixtureSet& fs) {
  (void)ctx;
  LawReport rep;
  rep.suite = "sqr";

  ValidationReport vr = validate_fixture_set(fs);
  rep.check("sqr/validators", vr.ok(),
            vr.ok() ? "" : vr.violations.front().law + " at " + vr.violations.front().witness);

  // Monoidal strictness of the product under canonical naming.
  std::vector<CatPtr> cats;
  for (const auto& [n, c] : fs.categories)
    if (c->morphisms.size() <= 12) cats.push_back(c);
  std::sort(cats.begin(), cats.end(),
            [](const CatPtr& a, const CatPtr& b) { return a->label < b->label; });
  if (cats.size() > 3) cats.resize(3);
  CatPtr I = terminal_category();
  for (const CatPtr& a : cats) {
    entry(rep, "sqr/unit-law/" + a->label, [&](LawReport& r, const std::string& c) {
      r.check(c, *product(a, I) == *a && *product(I, a) == *a, "product with unit differs");
    });
    entry(rep, "sqr/flip-involution/" + a->label, [&](LawReport& r, const std::string& c) {
      for (const CatPtr& b : cats) {
        Fun round = compose_fun(flip(b, a), flip(a, b));
        if (round != identity_fun(product(a, b))) {
          r.fail(c, "with " + b->label);
          return;
        }
      }
      r.exact(c);
    });
  }
  if (cats.size() >= 3) {
    entry(rep, "sqr/assoc-law", [&](LawReport& r, const std::string& c) {
      CatPtr ab_c = product(product(cats[0], cats[1]), cats[2]);
      CatPtr a_bc = product(cats[0], product(cats[1], cats[2]));
      r.check(c, *ab_c == *a_bc, "flattened names differ");
    });
    entry(rep, "sqr/hexagon", [&](LawReport& r, const std::string& c) {
      Fun lhs = flip(cats[0], product(cats[1], cats[2]));
      Fun rhs = compose_fun(product_fun(identity_fun(cats[1]), flip(cats[0], cats[2])),
                            product_fun(flip(cats[0], cats[1]), identity_fun(cats[2])));
      r.check(c, lhs == rhs, "two routes differ");
    });
  }
  {
    std::vector<Fun> funs;
    for (const auto& [n, f] : fs.functors)
      if (f.src->morphisms.size() * f.dst->morphisms.size() <= 400) funs.push_back(f);
    entry(rep, "sqr/flip-naturality", [&](LawReport& r, const std::string& c) {
      std::size_t count = 0;
      for (const Fun& f : funs)
        for (const Fun& g : funs) {
          if (++count > 16) break;
          Fun lhs = compose_fun(flip(f.dst, g.dst), product_fun(f, g));
          Fun rhs = compose_fun(product_fun(g, f), flip(f.src, g.src));
          if (lhs != rhs) {
            r.fail(c, f.label + " vs " + g.label);
            return;
          }
        }
      r.exact(c, std::to_string(std::min<std::size_t>(count, 16)) + " instances");
    });
  }

  // Middle four interchange, phrased through square composition.
  std::vector<Nat> nats = collect_nats(fs);
  entry(rep, "sqr/interchange", [&](LawReport& r, const std::string& c) {
    std::size_t instances = 0;
    for (const Nat& a : nats)
      for (const Nat& a2 : nats) {
        if (!(a2.src == a.dst)) continue;
        for (const Nat& b : nats)
          for (const Nat& b2 : nats) {
            if (!(b2.src == b.dst)) continue;
            if (*b.src.src != *a.src.dst) continue;
            if (instances >= 50000) goto done;
            ++instances;
            Nat lhs = vcomp(hcomp_nat(b2, a2), hcomp_nat(b, a));
            Nat rhs = hcomp_nat(vcomp(b2, b), vcomp(a2, a));
            if (lhs != rhs) {
              r.fail(c, a.label + "," + a2.label + ";" + b.label + "," + b2.label);
              return;
            }
            // The same instance as a square-composition grid.
            SqrCell sl = sqr_vcomp(nat_square(a2), nat_square(a));
            SqrCell sr = sqr_vcomp(nat_square(b2), nat_square(b));
            SqrCell grid1 = sqr_hcomp(sr, sl);
            SqrCell grid2 = sqr_vcomp(sqr_hcomp(nat_square(b2), nat_square(a2)),
                                      sqr_hcomp(nat_square(b), nat_square(a)));
            if (!(grid1 == grid2)) {
              r.fail(c, "square grid at " + a.label + "," + b.label);
              return;
            }
          }
      }
  done:
    r.exact(c, std::to_string(instances) + " instances");
  });

  entry(rep, "sqr/identity-squares", [&](LawReport& r, const std::string& c) {
    for (const Nat& a : nats) {
      SqrCell s = nat_square(a);
      if (!(sqr_hcomp(sqr_identity_v(s.right), s) == s) ||
          !(sqr_hcomp(s, sqr_identity_v(s.left)) == s) ||
          !(sqr_vcomp(sqr_identity_h(s.bottom), s) == s) ||
          !(sqr_vcomp(s, sqr_identity_h(s.top)) == s)) {
        r.fail(c, a.label);
        return;
      }
    }
    r.exact(c, std::to_string(nats.size()) + " cells");
  });
  return rep;
}

LawReport mnd_suite(EmContext& ctx, const FixtureSet& fs) {
  (void)ctx;
  LawReport rep;
  rep.suite = "mnd";
  DerivedCells dc = derive_cells(fs);
  std::vector<MonadMorH> hmors;
  for (const auto& [n, m] : fs.hmors) hmors.push_back(m);
  for (const auto& m : dc.hmors) hmors.push_back(m);
  std::vector<MonadMorV> vmors;
  for (const auto& [n, m] : fs.vmors) vmors.push_back(m);
  for (const auto& m : dc.vmors) vmors.push_back(m);

  entry(rep, "mnd/identity-neutral", [&](LawReport& r, const std::string& c) {
    for (const MonadMorH& m : hmors) {
      if (!(compose_h(identity_mor_h(m.dst), m) == m) ||
          !(compose_h(m, identity_mor_h(m.src)) == m)) {
        r.fail(c, m.name);
        return;
      }
    }
    for (const MonadMorV& m : vmors) {
      if (!(compose_v(identity_mor_v(m.dst), m) == m) ||
          !(compose_v(m, identity_mor_v(m.src)) == m)) {
        r.fail(c, m.name);
        return;
      }
    }
    r.exact(c);
  });

  entry(rep, "mnd/compose-valid", [&](LawReport& r, const std::string& c) {
    for (const MonadMorH& f : hmors)
      for (const MonadMorH& g : hmors) {
        if (!(f.dst == g.src)) continue;
        if (!validate_monad_mor(compose_h(g, f)).ok()) {
          r.fail(c, g.name + "." + f.name);
          return;
        }
      }
    for (const MonadMorV& f : vmors)
      for (const MonadMorV& g : vmors) {
        if (!(f.dst == g.src)) continue;
        if (!validate_monad_mor(compose_v(g, f)).ok()) {
          r.fail(c, g.name + "." + f.name);
          return;
        }
      }
    r.exact(c);
  });

  entry(rep, "mnd/compose-assoc", [&](LawReport& r, const std::string& c) {
    std::size_t count = 0;
    for (const MonadMorH& f : hmors)
      for (const MonadMorH& g : hmors)
        for (const MonadMorH& h : hmors) {
          if (!(f.dst == g.src) || !(g.dst == h.src)) continue;
          ++count;
          if (!(compose_h(h, compose_h(g, f)) == compose_h(compose_h(h, g), f))) {
            r.fail(c, h.name + "." + g.name + "." + f.name);
            return;
          }
        }
    r.exact(c, std::to_string(count) + " triples");
  });

  entry(rep, "mnd/tensor-unit", [&](LawReport& r, const std::string& c) {
    Monad unit = identity_monad(terminal_category());
    for (const auto& [n, m] : fs.monads) {
      if (!(monoidal_product_monads(m, unit) == m) ||
          !(monoidal_product_monads(unit, m) == m)) {
        r.fail(c, n);
        return;
      }
    }
    r.exact(c);
  });

  entry(rep, "mnd/tensor-mor-valid", [&](LawReport& r, const std::string& c) {
    std::size_t count = 0;
    for (const MonadMorH& f : hmors) {
      if (f.src.base->morphisms.size() * f.src.base->morphisms.size() > size_cap()) continue;
      if (++count > 6) break;
      if (!validate_monad_mor(product_mor(f, f)).ok()) {
        r.fail(c, f.name);
        return;
      }
    }
    r.exact(c, std::to_string(count) + " cells");
  });

  entry(rep, "mnd/tensor-interchange", [&](LawReport& r, const std::string& c) {
    std::size_t count = 0;
    for (const MonadMorH& f : hmors)
      for (const MonadMorH& g : hmors) {
        if (!(f.dst == g.src)) continue;
        if (g.dst.base->morphisms.size() * g.dst.base->morphisms.size() > size_cap())
          continue;
        if (++count > 4) break;
        MonadMorH lhs = product_mor(compose_h(g, f), compose_h(g, f));
        MonadMorH rhs = compose_h(product_mor(g, g), product_mor(f, f));
        if (!(lhs == rhs)) {
          r.fail(c, g.name + "." + f.name);
          return;
        }
      }
    r.exact(c, std::to_string(count) + " instances");
  });

  entry(rep, "mnd/symmetry", [&](LawReport& r, const std::string& c) {
    std::vector<Monad> ms;
    for (const auto& [n, m] : fs.monads)
      if (m.base->morphisms.size() <= 12) ms.push_back(m);
    for (const Monad& a : ms)
      for (const Monad& b : ms) {
        MonadMorH s1 = symmetry_monad_cell(a, b);
        if (!validate_monad_mor(s1).ok()) {
          r.fail(c, "cell " + s1.name);
          return;
        }
        MonadMorH round = compose_h(symmetry_monad_cell(b, a), s1);
        if (!(round == identity_mor_h(s1.src))) {
          r.fail(c, "involution " + s1.name);
          return;
        }
      }
    r.exact(c, std::to_string(ms.size() * ms.size()) + " pairs");
  });

  entry(rep, "mnd/trans-composites", [&](LawReport& r, const std::string& c) {
    std::size_t count = 0;
    for (const auto& [n, om] : fs.oidal_monads) {
      if (om.p != 0 || om.q != 1) continue;
      MndPseudomonoid mp = oidal_to_mnd(om);
      for (const MonadTransH* t : {&mp.assoc, &mp.lunit, &mp.runit}) {
        if (!validate_monad_trans(*t).ok()) {
          r.fail(c, t->name);
          return;
        }
        // Vertical composite with an identity transformation revalidates.
        MonadTransH idt{t->src, t->src, identity_nat(t->src.f), "1"};
        MonadTransH comp{t->src, t->dst, vcomp(t->omega, idt.omega), t->name + ".1"};
        if (!validate_monad_trans(comp).ok()) {
          r.fail(c, comp.name);
          return;
        }
        // Horizontal composite with the identity cell on the codomain monad.
        MonadTransH idh{identity_mor_h(t->src.dst), identity_mor_h(t->src.dst),
                        identity_nat(identity_fun(t->src.dst.base)), "1h"};
        MonadTransH hcmp{compose_h(idh.src, t->src), compose_h(idh.dst, t->dst),
                         hcomp_nat(idh.omega, t->omega), "1h." + t->name};
        if (!validate_monad_trans(hcmp).ok()) {
          r.fail(c, hcmp.name);
          return;
        }
        ++count;
      }
    }
    r.exact(c, std::to_string(count) + " transformations");
  });

  entry(rep, "mnd/square-compositions", [&](LawReport& r, const std::string& c) {
    std::size_t count = 0;
    std::vector<MndSquare> squares;
    for (const auto& [n, s] : fs.squares) squares.push_back(s);
    for (const auto& s : dc.squares) squares.push_back(s);
    for (const MndSquare& a : squares)
      for (const MndSquare& b : squares) {
        if (b.left == a.right) {
          ++count;
          if (!validate_mnd_square(mnd_hcomp(b, a)).ok()) {
            r.fail(c, b.name + "|" + a.name);
            return;
          }
        }
        if (b.top == a.bottom) {
          ++count;
          if (!validate_mnd_square(mnd_vcomp(b, a)).ok()) {
            r.fail(c, b.name + "/" + a.name);
            return;
          }
        }
      }
    r.exact(c, std::to_string(count) + " composites");
  });
  return rep;
}

LawReport k_suite(EmContext& ctx, const FixtureSet& fs) {
  LawReport rep;
  rep.suite = "K";
  DerivedCells dc = derive_cells(fs);
  std::vector<MonadMorH> hmors;
  for (const auto& [n, m] : fs.hmors) hmors.push_back(m);
  for (const auto& m : dc.hmors) hmors.push_back(m);
  std::vector<MonadMorV> vmors;
  for (const auto& [n, m] : fs.vmors) vmors.push_back(m);
  for (const auto& m : dc.vmors) vmors.push_back(m);
  std::vector<MndSquare> squares;
  for (const auto& [n, s] : fs.squares) squares.push_back(s);
  for (const auto& s : dc.squares) squares.push_back(s);

  for (const auto& [name, m] : fs.monads) {
    entry(rep, "K/identity-H/" + name, [&](LawReport& r, const std::string& c) {
      r.check(c, H1(ctx, identity_mor_h(m)) == identity_fun(ctx.em(m).em_cat),
              "lifted identity differs");
    });
    entry(rep, "K/identity-V/" + name, [&](LawReport& r, const std::string& c) {
      bool exact = ctx.v1(identity_mor_v(m)).fun == identity_fun(ctx.em(m).em_cat);
      compare_with_fallback(r, c, exact, [&] { return v_identity_comparison(ctx, m); });
    });
    entry(rep, "K/unit-coequalizer/" + name, [&](LawReport& r, const std::string& c) {
      r.check(c, unit_coequalizer_check(ctx, m), "counit cocone not universal");
    });
  }

  for (const MonadMorH& h : hmors) {
    entry(rep, "K/em-counit-compat/" + h.name, [&](LawReport& r, const std::string& c) {
      const EMBundle& et = ctx.em(h.src);
      const EMBundle& ez = ctx.em(h.dst);
      Fun hh = H1(ctx, h);
      for (const auto& [pn, p] : et.algebra_by_name) {
        Id lhs = ez.forgetful.mo(ez.counit.at(hh.ob(pn)));
        Id rhs = h.dst.base->compose(h.f.mo(p.action), h.chi.at(p.carrier));
        if (lhs != rhs) {
          r.fail(c, "at " + pn);
          return;
        }
      }
      r.exact(c);
    });
  }

  for (const MonadMorH& f : hmors)
    for (const MonadMorH& g : hmors) {
      if (!(f.dst == g.src)) continue;
      entry(rep, "K/hcomp/" + g.name + "." + f.name,
            [&](LawReport& r, const std::string& c) {
              r.check(c,
                      H1(ctx, compose_h(g, f)) == compose_fun(H1(ctx, g), H1(ctx, f)),
                      "composite lift differs");
            });
    }

  for (const MonadMorV& v : vmors) {
    entry(rep, "K/free-whisker/" + v.name, [&](LawReport& r, const std::string& c) {
      LemmaVOutcome out = lemma_v_check(ctx, v);
      if (!out.ok)
        r.fail(c, out.detail);
      else if (out.exact)
        r.exact(c);
      else
        r.upto(c, out.detail);
    });
  }

  for (const MonadMorV& f : vmors)
    for (const MonadMorV& g : vmors) {
      if (!(f.dst == g.src)) continue;
      entry(rep, "K/vcomp/" + g.name + "." + f.name,
            [&](LawReport& r, const std::string& c) {
              bool exact = ctx.v1(compose_v(g, f)).fun ==
                           compose_fun(ctx.v1(g).fun, ctx.v1(f).fun);
              compare_with_fallback(r, c, exact,
                                    [&] { return v_composite_comparison(ctx, g, f); });
            });
      for (const MonadMorV& h : vmors) {
        if (!(g.dst == h.src)) continue;
        entry(rep, "K/vcomp-cocycle/" + h.name + "." + g.name + "." + f.name,
              [&](LawReport& r, const std::string& c) {
                Nat c_gf = v_composite_comparison(ctx, g, f);
                Nat c_hg = v_composite_comparison(ctx, h, g);
                Nat c_h_gf = v_composite_comparison(ctx, h, compose_v(g, f));
                Nat c_hg_f = v_composite_comparison(ctx, compose_v(h, g), f);
                // route 1: through V(h).V(g.f)
                Nat route1 = vcomp(whisker_left(ctx.v1(h).fun, c_gf), c_h_gf);
                // route 2: through V(h.g).V(f)
                Nat route2 = vcomp(whisker_right(c_hg, ctx.v1(f).fun), c_hg_f);
                r.check(c, route1.components == route2.components, "cocycle fails");
              });
      }
    }

  // Strict monoidality and symmetry.
  std::vector<std::pair<std::string, Monad>> monads(fs.monads.begin(), fs.monads.end());
  for (const auto& [n1, t] : monads)
    for (const auto& [n2, s] : monads) {
      if (t.base->morphisms.size() * s.base->morphisms.size() > size_cap()) continue;
      entry(rep, "K/monoidal-em/" + n1 + "," + n2,
            [&](LawReport& r, const std::string& c) {
              bool eq =
                  *ctx.em(monoidal_product_monads(t, s)).em_cat ==
                  *product(ctx.em(t).em_cat, ctx.em(s).em_cat);
              r.check(c, eq && comparison_is_identity(ctx, t, s),
                      "product em category or comparison differs");
            });
      entry(rep, "K/symmetry-H/" + n1 + "," + n2,
            [&](LawReport& r, const std::string& c) {
              r.check(c,
                      H1(ctx, symmetry_monad_cell(t, s)) ==
                          flip(ctx.em(t).em_cat, ctx.em(s).em_cat),
                      "lifted symmetry differs");
            });
      entry(rep, "K/symmetry-V/" + n1 + "," + n2,
            [&](LawReport& r, const std::string& c) {
              bool exact = ctx.v1(symmetry_monad_cell_v(t, s)).fun ==
                           flip(ctx.em(t).em_cat, ctx.em(s).em_cat);
              compare_with_fallback(r, c, exact,
                                    [&] { return v_symmetry_comparison(ctx, t, s); });
            });
    }

  for (std::size_t i = 0; i < hmors.size(); ++i) {
    const MonadMorH& f = hmors[i];
    if (f.src.base->morphisms.size() * f.src.base->morphisms.size() > size_cap()) continue;
    entry(rep, "K/monoidal-H/" + f.name, [&](LawReport& r, const std::string& c) {
      r.check(c,
              H1(ctx, product_mor(f, f)) == product_fun(H1(ctx, f), H1(ctx, f)),
              "tensor lift differs");
    });
  }
  for (std::size_t i = 0; i < vmors.size(); ++i) {
    const MonadMorV& f = vmors[i];
    if (f.src.base->morphisms.size() * f.src.base->morphisms.size() > size_cap()) continue;
    entry(rep, "K/monoidal-V/" + f.name, [&](LawReport& r, const std::string& c) {
      bool exact =
          ctx.v1(product_mor(f, f)).fun == product_fun(ctx.v1(f).fun, ctx.v1(f).fun);
      compare_with_fallback(r, c, exact, [&] { return v_tensor_comparison(ctx, f, f); });
    });
  }

  // Identity 2-cells are preserved in both directions: on the vertical side
  // on the nose, on the horizontal side through the identity comparisons.
  for (const MonadMorV& v : vmors) {
    entry(rep, "K/identity-cell-v/" + v.name, [&](LawReport& r, const std::string& c) {
      Nat k = K2(ctx, mnd_identity_v(v));
      r.check(c, k == identity_nat(ctx.v1(v).fun), "not the identity cell");
    });
  }
  for (const MonadMorH& h : hmors) {
    entry(rep, "K/identity-cell-h/" + h.name, [&](LawReport& r, const std::string& c) {
      Nat k = K2(ctx, mnd_identity_h(h));
      Fun lifted = H1(ctx, h);
      if (k == identity_nat(lifted)) {
        r.exact(c);
        return;
      }
      Nat c_src = v_identity_comparison(ctx, h.src);
      Nat c_dst = v_identity_comparison(ctx, h.dst);
      Nat lhs = vcomp(whisker_left(lifted, c_src), k);
      Nat rhs = whisker_right(c_dst, lifted);
      if (lhs.components == rhs.components)
        r.upto(c, "identity after canonical conjugation");
      else
        r.fail(c, "conjugated cell is not the identity");
    });
  }

  for (const MndSquare& s : squares) {
    entry(rep, "K/square/" + s.name, [&](LawReport& r, const std::string& c) {
      Nat k = K2(ctx, s);
      r.exact(c, std::to_string(k.components.size()) + " components");
    });
  }
  for (const MndSquare& a : squares)
    for (const MndSquare& b : squares) {
      if (b.left == a.right) {
        entry(rep, "K/square-hcomp/" + b.name + "|" + a.name,
              [&](LawReport& r, const std::string& c) {
                Nat direct = K2(ctx, mnd_hcomp(b, a));
                Nat pasted = vcomp(whisker_left(H1(ctx, b.bottom), K2(ctx, a)),
                                   whisker_right(K2(ctx, b), H1(ctx, a.top)));
                r.check(c, direct == pasted, "pasting differs");
              });
      }
      if (b.top == a.bottom) {
        entry(rep, "K/square-vcomp/" + b.name + "/" + a.name,
              [&](LawReport& r, const std::string& c) {
                MndSquare comp = mnd_vcomp(b, a);
                Nat direct = K2(ctx, comp);
                Nat pasted = vcomp(whisker_right(K2(ctx, b), ctx.v1(a.left).fun),
                                   whisker_left(ctx.v1(b.right).fun, K2(ctx, a)));
                if (direct == pasted) {
                  r.exact(c);
                  return;
                }
                Nat c_left = v_composite_comparison(ctx, b.left, a.left);
                Nat c_right = v_composite_comparison(ctx, b.right, a.right);
                Nat lhs = vcomp(whisker_left(H1(ctx, b.bottom), c_left), direct);
                Nat rhs = vcomp(pasted, whisker_right(c_right, H1(ctx, a.top)));
                if (lhs.components == rhs.components)
                  r.upto(c, "after canonical conjugation");
                else
                  r.fail(c, "conjugated pasting differs");
              });
      }
    }
  for (const MndSquare& s : squares) {
    if (s.top.src.base->morphisms.size() * s.top.src.base->morphisms.size() > size_cap())
      continue;
    entry(rep, "K/square-tensor/" + s.name, [&](LawReport& r, const std::string& c) {
      MndSquare ss = product_square(s, s);
      Nat direct = K2(ctx, ss);
      Nat pasted = product_nat(K2(ctx, s), K2(ctx, s));
      if (direct == pasted) {
        r.exact(c);
        return;
      }
      Nat c_left = v_tensor_comparison(ctx, s.left, s.left);
      Nat c_right = v_tensor_comparison(ctx, s.right, s.right);
      Nat lhs = vcomp(whisker_left(H1(ctx, product_mor(s.bottom, s.bottom)), c_left),
                      direct);
      Nat rhs = vcomp(pasted, whisker_right(c_right, H1(ctx, product_mor(s.top, s.top))));
      if (lhs.components == rhs.components)
        r.upto(c, "after canonical conjugation");
      else
        r.fail(c, "conjugated tensor differs");
    });
  }
  return rep;
}

LawReport adjunction_suite(EmContext& ctx, const FixtureSet& fs) {
  LawReport rep;
  rep.suite = "adjunction";
  DerivedCells dc = derive_cells(fs);

  for (const auto& [name, m] : fs.monads) {
    entry(rep, "adjunction/counit-modification/" + name,
          [&](LawReport& r, const std::string& c) {
            ValidationReport v = validate_mnd_square(counit_modification(ctx, m));
            r.check(c, v.ok(), v.ok() ? "" : v.violations.front().law);
          });
    entry(rep, "adjunction/unit-modification/" + name,
          [&](LawReport& r, const std::string& c) {
            ValidationReport v = validate_mnd_square(unit_modification(ctx, m));
            r.check(c, v.ok(), v.ok() ? "" : v.violations.front().law);
          });
    entry(rep, "adjunction/triangles/" + name, [&](LawReport& r, const std::string& c) {
      r.check(c, orthogonal_triangles(ctx, m), "a pasted triangle is not the identity");
    });
  }
  std::vector<MonadMorV> vmors;
  for (const auto& [n, m] : fs.vmors) vmors.push_back(m);
  for (const auto& m : dc.vmors) vmors.push_back(m);
  for (const MonadMorV& v : vmors) {
    entry(rep, "adjunction/counit-square/" + v.name,
          [&](LawReport& r, const std::string& c) {
            ValidationReport rv = validate_mnd_square(counit_square(ctx, v));
            r.check(c, rv.ok(), rv.ok() ? "" : rv.violations.front().law);
          });
  }
  std::vector<MonadMorH> hmors;
  for (const auto& [n, m] : fs.hmors) hmors.push_back(m);
  for (const auto& m : dc.hmors) hmors.push_back(m);
  for (const MonadMorH& h : hmors) {
    entry(rep, "adjunction/free-square/" + h.name,
          [&](LawReport& r, const std::string& c) {
            ValidationReport rv = validate_mnd_square(free_side_square(ctx, h));
            r.check(c, rv.ok(), rv.ok() ? "" : rv.violations.front().law);
          });
  }
  std::vector<MndSquare> squares;
  for (const auto& [n, s] : fs.squares) squares.push_back(s);
  for (const auto& s : dc.squares) squares.push_back(s);
  for (const MndSquare& s : squares) {
    entry(rep, "adjunction/counit-naturality/" + s.name,
          [&](LawReport& r, const std::string& c) {
            r.check(c, counit_naturality(ctx, s), "pastings differ");
          });
  }
  for (const auto& [name, om] : fs.oidal_monads) {
    if (om.p != 1 || om.q != 0) continue;
    entry(rep, "adjunction/em-monoidal-cells/" + name,
          [&](LawReport& r, const std::string& c) {
            ValidationReport rv = em_in_M10_check(ctx, om);
            r.check(c, rv.ok(),
                    rv.ok() ? "" : rv.violations.front().law + " at " +
                                       rv.violations.front().witness);
          });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSON shaping

ordered_json validation_json(const ValidationReport& rep) {
  ordered_json j;
  j["subject"] = rep.subject;
  j["ok"] = rep.ok();
  ordered_json vs = ordered_json::array();
  for (const auto& v : rep.violations) vs.push_back({{"law", v.law}, {"witness", v.witness}});
  j["violations"] = vs;
  return j;
}

ordered_json law_report_json(const LawReport& rep, bool strict_iso) {
  ordered_json j;
  j["suite"] = rep.suite;
  ordered_json es = ordered_json::array();
  for (const auto& e : rep.entries) {
    ordered_json je;
    je["claim"] = e.claim;
    je["status"] = to_string(e.status);
    if (!e.detail.empty()) je["detail"] = e.detail;
    es.push_back(je);
  }
  j["entries"] = es;
  j["passed"] = rep.passed(strict_iso);
  return j;
}

ordered_json em_report_json(EmContext& ctx, const std::string& name, const Monad& m) {
  const EMBundle& e = ctx.em(m);
  ordered_json j;
  j["monad"] = name;
  ordered_json algs = ordered_json::object();
  for (const Id& o : e.em_cat->objects) {
    const Algebra& a = e.algebra(o);
    algs[o] = {{"carrier", a.carrier}, {"action", a.action}};
  }
  j["algebras"] = algs;
  ordered_json mors = ordered_json::array();
  for (const Mor& mm : e.em_cat->morphisms)
    mors.push_back({{"name", mm.name}, {"src", mm.src}, {"dst", mm.dst}});
  j["em_morphisms"] = mors;
  j["forgetful"] = ordered_json(std::map<std::string, std::string>(
      e.forgetful.obj_map.begin(), e.forgetful.obj_map.end()));
  j["free"] = ordered_json(
      std::map<std::string, std::string>(e.free.obj_map.begin(), e.free.obj_map.end()));
  j["unit"] = ordered_json(std::map<std::string, std::string>(e.unit.components.begin(),
                                                              e.unit.components.end()));
  j["counit"] = ordered_json(std::map<std::string, std::string>(
      e.counit.components.begin(), e.counit.components.end()));
  ValidationReport v = validate_em(e);
  j["laws"] = validation_json(v);
  j["unit_coequalizer"] = unit_coequalizer_check(ctx, m);
  return j;
}

namespace {

ordered_json fun_table_json(const Fun& f) {
  return ordered_json(std::map<std::string, std::string>(f.obj_map.begin(), f.obj_map.end()));
}

ordered_json pseudomonoid_json(const Pseudomonoid& p) {
  ordered_json j;
  j["base_objects"] = p.base->objects;
  j["mult"] = fun_table_json(p.mult);
  j["unit"] = p.unit.ob("()");
  return j;
}

ordered_json lift_json(EmContext& ctx, const std::string& mode, const OidalMonad& om) {
  ordered_json j;
  j["oidal_monad"] = om.name;
  j["mode"] = mode;
  if (mode == "u") {
    Pseudomonoid out = lift_along_u(ctx, om);
    j["lifted"] = pseudomonoid_json(out);
    j["validation"] = validation_json(validate_pseudomonoid(out));
  } else if (mode == "f") {
    Pseudomonoid out = lift_along_f(ctx, om);
    j["lifted"] = pseudomonoid_json(out);
    j["validation"] = validation_json(validate_pseudomonoid(out));
    LemmaVOutcome lv = lemma_v_check(ctx, mon_mult_vcell(om));
    j["free_square"] = lv.ok ? (lv.exact ? "exact" : "upto-iso") : "fail";
  } else if (mode == "duoidal") {
    Duoidal out = lift_duoidal(ctx, om);
    j["pm_h"] = pseudomonoid_json(out.pm_h);
    j["pm_v"] = pseudomonoid_json(out.pm_v);
    j["xi"] = ordered_json(std::map<std::string, std::string>(out.xi.components.begin(),
                                                              out.xi.components.end()));
    j["xi0"] = ordered_json(std::map<std::string, std::string>(out.xi0.components.begin(),
                                                               out.xi0.components.end()));
    j["xi_0"] = ordered_json(std::map<std::string, std::string>(
        out.xi_0.components.begin(), out.xi_0.components.end()));
    j["xi00"] = ordered_json(std::map<std::string, std::string>(
        out.xi00.components.begin(), out.xi00.components.end()));
    j["validation"] = validation_json(validate_duoidal(out));
  } else {
    throw InputError("unknown lift mode " + mode);
  }
  return j;
}

int exit_from(bool passed) { return passed ? 0 : 1; }

}  // namespace

RunResult run_command(const std::string& command, const RunOptions& opts) {
  RunResult res;
  if (opts.max_size) set_size_cap(opts.max_size);
  try {
    if (command == "check") {
      ValidationReport collected;
      collected.subject = "load";
      FixtureSet fs = load_fixture_dir(opts.fixture_dir, &collected);
      ValidationReport post = validate_fixture_set(fs);
      res.report["command"] = "check";
      res.report["load"] = validation_json(collected);
      res.report["validators"] = validation_json(post);
      res.exit_code = exit_from(collected.ok() && post.ok());
      return res;
    }

    FixtureSet fs = load_fixture_dir(opts.fixture_dir);
    EmContext ctx;
    res.report["command"] = command;

    if (command == "em") {
      ordered_json out = ordered_json::object();
      bool all_ok = true;
      for (const auto& [name, m] : fs.monads) {
        if (!opts.target.empty() && name != opts.target) continue;
        ordered_json jm = em_report_json(ctx, name, m);
        all_ok = all_ok && jm["laws"]["ok"].get<bool>() &&
                 jm["unit_coequalizer"].get<bool>();
        out[name] = std::move(jm);
      }
      if (out.empty()) throw InputError("no monad named " + opts.target);
      res.report["em"] = out;
      res.exit_code = exit_from(all_ok);
    } else if (command == "lift") {
      std::string mode = opts.mode.empty() ? "u" : opts.mode;
      ordered_json out = ordered_json::object();
      for (const auto& [name, om] : fs.oidal_monads) {
        if (!opts.target.empty() && name != opts.target) continue;
        bool fits = (mode == "u" && om.p == 0 && om.q == 1) ||
                    (mode == "f" && om.p == 1 && om.q == 0) ||
                    (mode == "duoidal" && om.p == 1 && om.q == 1);
        if (!fits) {
          if (!opts.target.empty())
            throw InputError("oidal monad " + name + " has shape (" +
                             std::to_string(om.p) + "," + std::to_string(om.q) +
                             "), mode " + mode + " does not apply");
          continue;
        }
        out[name] = lift_json(ctx, mode, om);
      }
      if (out.empty()) throw InputError("no oidal monad matches mode " + mode);
      res.report["lift"] = out;
      res.exit_code = 0;
    } else if (command == "laws") {
      std::string suite = opts.suite.empty() ? "K" : opts.suite;
      LawReport rep;
      if (suite == "sqr")
        rep = sqr_suite(ctx, fs);
      else if (suite == "mnd")
        rep = mnd_suite(ctx, fs);
      else if (suite == "K")
        rep = k_suite(ctx, fs);
      else if (suite == "adjunction")
        rep = adjunction_suite(ctx, fs);
      else
        throw InputError("unknown suite " + suite);
      res.report["laws"] = law_report_json(rep, opts.strict_iso);
      res.exit_code = exit_from(rep.passed(opts.strict_iso));
    } else if (command == "coeq") {
      auto it = fs.categories.find(opts.target);
      if (it == fs.categories.end()) throw InputError("no category named " + opts.target);
      const FinCat& c = *it->second;
      auto coeq = coequalizer(c, opts.left, opts.right);
      res.report["category"] = opts.target;
      res.report["pair"] = {opts.left, opts.right};
      if (auto sec = reflexive_section(c, opts.left, opts.right))
        res.report["reflexive_section"] = *sec;
      if (coeq) {
        res.report["apex"] = coeq->apex;
        res.report["leg"] = coeq->leg;
        res.report["universal"] = cocone_universal(c, opts.left, opts.right, *coeq);
      } else {
        res.report["apex"] = nullptr;
      }
      res.exit_code = 0;
    } else if (command == "report") {
      ValidationReport post = validate_fixture_set(fs);
      res.report["check"] = validation_json(post);
      bool ok = post.ok();
      for (const std::string suite : {"sqr", "mnd", "K", "adjunction"}) {
        LawReport rep;
        if (suite == "sqr")
          rep = sqr_suite(ctx, fs);
        else if (suite == "mnd")
          rep = mnd_suite(ctx, fs);
        else if (suite == "K")
          rep = k_suite(ctx, fs);
        else
          rep = adjunction_suite(ctx, fs);
        res.report[suite] = law_report_json(rep, opts.strict_iso);
        ok = ok && rep.passed(opts.strict_iso);
      }
      res.exit_code = exit_from(ok);
    } else {
      throw InputError("unknown command " + command);
    }
  } catch (const EngineError& e) {
    res.report = ordered_json{{"error", e.what()}};
    res.exit_code = 2;
  } catch (const std::exception& e) {
    res.report = ordered_json{{"error", std::string("internal: ") + e.what()}};
    res.exit_code = 2;
  }
  return res;
}

}  // namespace oidal
