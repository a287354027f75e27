#pragma once

#include <tuple>

#include "oidal/colim.hpp"
#include "oidal/mnd.hpp"

namespace oidal {

struct Algebra {
  Id carrier;
  Id action;  // morphism t(carrier) -> carrier
  bool operator==(const Algebra& o) const {
    return carrier == o.carrier && action == o.action;
  }
};

/// Eilenberg-Moore data for a monad.  Algebra and algebra-morphism names are
/// chosen canonically: an algebra whose action is an identity is named by its
/// carrier, and algebras over product bases are named componentwise, so that
/// the EM category of an identity monad is the base itself and the EM
/// category of a product monad is the product of the EM categories, as stored
/// data.
struct EMBundle {
  Monad monad;
  CatPtr em_cat;
  std::map<Id, Algebra> algebra_by_name;
  std::map<std::tuple<Id, Id, Id>, Id> mor_index;  // (base mor, src, dst) -> em mor
  Fun forgetful;  // u : em_cat -> base
  Fun free;       // f : base -> em_cat
  Nat unit;       // 1 -> u.f   (equals the monad unit)
  Nat counit;     // f.u -> 1

  const Algebra& algebra(const Id& em_obj) const;
  /// The EM morphism over base morphism `m` from em object `src` to `dst`.
  Id em_mor(const Id& base_mor, const Id& src, const Id& dst) const;
};

/// Vertical action data for one monad morphism: the functor together with
/// the chosen coequalizer (and its defining parallel pair) per source algebra.
struct V1Bundle {
  MonadMorV cell;
  Fun fun;
  std::map<Id, Cocone> pi;                  // em(t) object -> cocone in em(s)
  std::map<Id, std::pair<Id, Id>> pairs;    // em(t) object -> the parallel pair
};

/// Caches EM and vertical-action bundles per monad / vertical 1-cell so that
/// repeated constructions reuse one deterministic choice of coequalizers.
class EmContext {
 public:
  const EMBundle& em(const Monad& m);
  const V1Bundle& v1(const MonadMorV& m);

 private:
  std::vector<std::pair<Monad, std::shared_ptr<EMBundle>>> em_cache_;
  std::vector<std::pair<MonadMorV, std::shared_ptr<V1Bundle>>> v_cache_;
};

std::string name_algebra(const FinCat& base, const Id& carrier, const Id& action);

EMBundle build_em(const Monad& m);
ValidationReport validate_em(const EMBundle& e);

Fun H1(EmContext& ctx, const MonadMorH& m);
Nat H2(EmContext& ctx, const MonadTransH& t);
Nat V2(EmContext& ctx, const MonadTransV& t);

struct LemmaVOutcome {
  bool ok = true;       // splitting verified and comparisons invertible
  bool exact = true;    // chosen coequalizers coincide with the split ones
  std::string detail;
};

/// Checks that whiskering the chosen coequalizers with the free 1-cell lands
/// on the split coequalizer presentation, exactly or up to the canonical
/// comparison.  Implies the free-side lifting square for the cell.
LemmaVOutcome lemma_v_check(EmContext& ctx, const MonadMorV& m);

/// Verifies that the counit cocone (P, action) is a coequalizer of the pair
/// (free action, counit at free) for every algebra of the monad.
bool unit_coequalizer_check(EmContext& ctx, const Monad& m);

/// Rebuilds the comparison functor em(t) x em(s) -> em(t (x) s) from the
/// product adjunction and reports whether it is the identity.
bool comparison_is_identity(EmContext& ctx, const Monad& t, const Monad& s);

}  // namespace oidal
