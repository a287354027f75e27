#pragma once

#include "oidal/fincat.hpp"

namespace oidal {

struct Monad {
  CatPtr base;
  Fun endo;   // t : base -> base
  Nat mult;   // t.t -> t
  Nat unit;   // 1 -> t
  std::string name;

  bool operator==(const Monad& o) const {
    return *base == *o.base && endo == o.endo && mult == o.mult && unit == o.unit;
  }
  bool operator!=(const Monad& o) const { return !(*this == o); }
};

/// Horizontal monad morphism (A,t) -> (B,s): functor f with chi : s.f -> f.t.
/// These are the 1-cells that lift along the forgetful side.
struct MonadMorH {
  Monad src, dst;
  Fun f;
  Nat chi;
  std::string name;

  bool operator==(const MonadMorH& o) const {
    return src == o.src && dst == o.dst && f == o.f && chi == o.chi;
  }
};

/// Vertical monad morphism (A,t) -> (B,s): functor f with chi : f.t -> s.f.
/// These lift along the free side via pointwise coequalizers.
struct MonadMorV {
  Monad src, dst;
  Fun f;
  Nat chi;
  std::string name;

  bool operator==(const MonadMorV& o) const {
    return src == o.src && dst == o.dst && f == o.f && chi == o.chi;
  }
};

/// omega : f -> g compatible with the chi structures on either side.
template <class Cell>
struct MonadTrans {
  Cell src, dst;
  Nat omega;
  std::string name;
};

using MonadTransH = MonadTrans<MonadMorH>;
using MonadTransV = MonadTrans<MonadMorV>;

ValidationReport validate_monad(const Monad& m);
ValidationReport validate_monad_mor(const MonadMorH& m);
ValidationReport validate_monad_mor(const MonadMorV& m);
ValidationReport validate_monad_trans(const MonadTransH& t);
ValidationReport validate_monad_trans(const MonadTransV& t);

Monad identity_monad(CatPtr a, const std::string& name = "");
MonadMorH identity_mor_h(const Monad& m);
MonadMorV identity_mor_v(const Monad& m);

MonadMorH compose_h(const MonadMorH& g, const MonadMorH& f);
MonadMorV compose_v(const MonadMorV& g, const MonadMorV& f);

Monad monoidal_product_monads(const Monad& m1, const Monad& m2);
MonadMorH product_mor(const MonadMorH& f, const MonadMorH& g);
MonadMorV product_mor(const MonadMorV& f, const MonadMorV& g);

/// The symmetry component of the monad 2-category: (flip, identity 2-cell).
MonadMorH symmetry_monad_cell(const Monad& m1, const Monad& m2);
MonadMorV symmetry_monad_cell_v(const Monad& m1, const Monad& m2);

}  // namespace oidal
