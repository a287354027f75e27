#include "oidal/colim.hpp"

namespace oidal {

namespace {

void require_parallel(const FinCat& c, const Id& f, const Id& g) {
  const Mor& mf = c.mor(f);
  const Mor& mg = c.mor(g);
  if (mf.src != mg.src || mf.dst != mg.dst)
    throw BoundaryError("parallel pair expected, got " + f + " and " + g);
}

}  // namespace

bool coequalizes(const FinCat& c, const Id& f, const Id& g, const Cocone& e) {
  const Mor& leg = c.mor(e.leg);
  const Mor& mf = c.mor(f);
  if (leg.src != mf.dst || leg.dst != e.apex) return false;
  return c.compose(e.leg, f) == c.compose(e.leg, g);
}

bool cocone_universal(const FinCat& c, const Id& f, const Id& g, const Cocone& e) {
  if (!coequalizes(c, f, g, e)) return false;
  const Id& y = c.mor(f).dst;
  for (const Id& r : c.objects) {
    for (const Id& m : c.hom(y, r)) {
      if (c.compose(m, f) != c.compose(m, g)) continue;
      int count = 0;
      for (const Id& u : c.hom(e.apex, r)) {
        if (c.compose(u, e.leg) == m) ++count;
        if (count > 1) return false;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

std::optional<Cocone> coequalizer(const FinCat& c, const Id& f, const Id& g) {
  require_parallel(c, f, g);
  const Id& y = c.mor(f).dst;
  for (const Id& q : c.objects) {
    for (const Id& leg : c.hom(y, q)) {
      Cocone e{q, leg};
      if (cocone_universal(c, f, g, e)) return e;
    }
  }
  return std::nullopt;
}

Id factor_through(const FinCat& c, const Cocone& e, const Id& m) {
  const Mor& mm = c.mor(m);
  const Mor& leg = c.mor(e.leg);
  if (mm.src != leg.src)
    throw BoundaryError("factor_through: " + m + " does not share the leg's source");
  std::optional<Id> found;
  for (const Id& u : c.hom(e.apex, mm.dst)) {
    if (c.compose(u, e.leg) == m) {
      if (found)
        throw FactorError("non-unique factorization of " + m + " through " + e.leg);
      found = u;
    }
  }
  if (!found) throw FactorError("no factorization of " + m + " through " + e.leg);
  return *found;
}

Comparison canonical_comparison(const FinCat& c, const Cocone& e1, const Cocone& e2) {
  Comparison cmp;
  cmp.fwd = factor_through(c, e1, e2.leg);
  cmp.bwd = factor_through(c, e2, e1.leg);
  if (c.compose(cmp.bwd, cmp.fwd) != c.id_of(e1.apex) ||
      c.compose(cmp.fwd, cmp.bwd) != c.id_of(e2.apex))
    throw FactorError("comparison between cocones on " + e1.apex + " and " + e2.apex +
                      " is not invertible");
  cmp.identity = (e1.apex == e2.apex) && c.is_identity(cmp.fwd);
  return cmp;
}

bool is_split_coequalizer(const FinCat& c, const Id& f, const Id& g, const Cocone& e,
                          const Id& s1, const Id& s2) {
  require_parallel(c, f, g);
  const Mor& mf = c.mor(f);
  const Mor& m1 = c.mor(s1);
  const Mor& m2 = c.mor(s2);
  const Mor& leg = c.mor(e.leg);
  if (leg.src != mf.dst || leg.dst != e.apex)
    throw BoundaryError("is_split_coequalizer: leg boundary mismatch");
  if (m1.src != mf.dst || m1.dst != mf.src)
    throw BoundaryError("is_split_coequalizer: s1 boundary mismatch");
  if (m2.src != e.apex || m2.dst != mf.dst)
    throw BoundaryError("is_split_coequalizer: s2 boundary mismatch");
  if (!coequalizes(c, f, g, e)) return false;
  if (c.compose(e.leg, s2) != c.id_of(e.apex)) return false;
  if (c.compose(f, s1) != c.id_of(mf.dst)) return false;
  if (c.compose(g, s1) != c.compose(s2, e.leg)) return false;
  return true;
}

std::optional<Id> reflexive_section(const FinCat& c, const Id& f, const Id& g) {
  require_parallel(c, f, g);
  const Mor& mf = c.mor(f);
  for (const Id& r : c.hom(mf.dst, mf.src)) {
    if (c.compose(f, r) == c.id_of(mf.dst) && c.compose(g, r) == c.id_of(mf.dst))
      return r;
  }
  return std::nullopt;
}

}  // namespace oidal
