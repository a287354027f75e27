#pragma once

#include "oidal/fincat.hpp"

namespace oidal {

struct Cocone {
  Id apex;
  Id leg;  // morphism into apex
  bool operator==(const Cocone& o) const { return apex == o.apex && leg == o.leg; }
};

/// Two-sided comparison between universal cocones for the same pair.
struct Comparison {
  Id fwd;  // apex1 -> apex2
  Id bwd;  // apex2 -> apex1
  bool identity;
};

bool coequalizes(const FinCat& c, const Id& f, const Id& g, const Cocone& e);

/// True iff e is universal among cocones for the parallel pair (f, g).
bool cocone_universal(const FinCat& c, const Id& f, const Id& g, const Cocone& e);

/// First universal cocone in stored object/morphism order, if any exists.
/// f and g must be parallel.
std::optional<Cocone> coequalizer(const FinCat& c, const Id& f, const Id& g);

/// The unique u with u . e.leg = m.  Throws FactorError when no or several
/// factorizations exist (either case means e was not universal for the pair
/// m coequalizes).
Id factor_through(const FinCat& c, const Cocone& e, const Id& m);

/// The unique isomorphism between two universal cocones for the same pair.
Comparison canonical_comparison(const FinCat& c, const Cocone& e1, const Cocone& e2);

/// Split coequalizer data for f, g : x -> y, e.leg : y -> q.
///   s1 : y -> x  with  f . s1 = 1_y  and  g . s1 = s2 . e.leg,
///   s2 : q -> y  with  e.leg . s2 = 1_q.
/// True iff all three identities hold (plus e coequalizing the pair).
bool is_split_coequalizer(const FinCat& c, const Id& f, const Id& g, const Cocone& e,
                          const Id& s1, const Id& s2);

/// Common section witness of a reflexive pair: r with f.r = g.r = identity.
std::optional<Id> reflexive_section(const FinCat& c, const Id& f, const Id& g);

}  // namespace oidal
