#pragma once

#include <optional>

#include "oidal/em.hpp"

namespace oidal {

/// Pseudomonoid (A, m, u, assoc, lunit, runit).  When the coherence product
/// category would exceed the size cap the coherence cells may be omitted;
/// validators then fall back to thinness (parallel 2-cells into a thin
/// category coincide) or report the cap.
struct Pseudomonoid {
  CatPtr base;
  Fun mult;  // A x A -> A
  Fun unit;  // I -> A
  Nat assoc, lunit, runit;
  bool coherence_omitted = false;
  std::string name;

  bool operator==(const Pseudomonoid& o) const {
    return *base == *o.base && mult == o.mult && unit == o.unit &&
           (coherence_omitted
                ? o.coherence_omitted
                : (!o.coherence_omitted && assoc == o.assoc && lunit == o.lunit &&
                   runit == o.runit));
  }
};

/// Opmonoidal 1-cell: binary f.m -> m'.ff, nullary f.u -> u'.
struct OpmonCell {
  Pseudomonoid src, dst;
  Fun f;
  Nat binary, nullary;
  std::string name;
};

/// Monoidal 1-cell: binary m'.ff -> f.m, nullary u' -> f.u.
struct MonCell {
  Pseudomonoid src, dst;
  Fun f;
  Nat binary, nullary;
  std::string name;
};

/// Two pseudomonoid structures on one object linked by interchange cells:
///   xi   : mv.(mh x mh) -> mh.(mv x mv).(1 sigma 1)
///   xi0  : uv -> mh.(uv x uv)
///   xi_0 : mv.(uh x uh) -> uh
///   xi00 : uv -> uh
struct Duoidal {
  Pseudomonoid pm_h;  // the axis lifted along the forgetful side
  Pseudomonoid pm_v;  // the axis lifted along the free side
  Nat xi, xi0, xi_0, xi00;
  std::string name;

  bool operator==(const Duoidal& o) const {
    return pm_h == o.pm_h && pm_v == o.pm_v && xi == o.xi && xi0 == o.xi0 &&
           xi_0 == o.xi_0 && xi00 == o.xi00;
  }
};

/// Alternative presentation of a duoidal object, with the binary interchange
/// stored in the opmonoidal orientation of the other construction order.
struct DuoidalAlt {
  Pseudomonoid pm_h, pm_v;
  Nat zeta, xi0, xi_0, xi00;
  std::string name;
};

/// A monad with compatible (op)monoidal structure.  Supported shapes:
/// (0,0) bare monad, (0,1) opmonoidal, (1,0) monoidal, (1,1) both on a
/// duoidal base (monoidal along pm_v, opmonoidal along pm_h).
struct OidalMonad {
  Monad monad;
  int p = 0, q = 0;
  std::optional<Pseudomonoid> pm;                      // p+q == 1
  std::optional<Duoidal> duo;                          // p == q == 1
  std::optional<Nat> mon_binary, mon_nullary;          // m.tt -> t.m, u -> t.u
  std::optional<Nat> opmon_binary, opmon_nullary;      // t.m -> m.tt, t.u -> u
  std::string name;
};

/// The monad-level presentation of an opmonoidal monad: a pseudomonoid whose
/// cells are monad morphisms and transformations over the given monad.
struct MndPseudomonoid {
  Monad monad;
  MonadMorH mult_cell, unit_cell;
  MonadTransH assoc, lunit, runit;
};

Pseudomonoid trivial_pseudomonoid();

ValidationReport validate_pseudomonoid(const Pseudomonoid& p);
ValidationReport validate_opmon_cell(const OpmonCell& c);
ValidationReport validate_mon_cell(const MonCell& c);
ValidationReport validate_duoidal(const Duoidal& d);
ValidationReport validate_oidal_monad(const OidalMonad& m);

OpmonCell compose_opmon(const OpmonCell& g, const OpmonCell& f);
MonCell compose_mon(const MonCell& g, const MonCell& f);
OpmonCell identity_opmon(const Pseudomonoid& p);
MonCell identity_mon(const Pseudomonoid& p);

Pseudomonoid tensor_pseudomonoids(const Pseudomonoid& a, const Pseudomonoid& b);

/// a x (flip) x b on squares of the base: ABAB -> AABB.
Fun middle_flip(CatPtr a, CatPtr b);

/// Lifting of the q = 1 structure along the forgetful 1-cell.
Pseudomonoid lift_along_u(EmContext& ctx, const OidalMonad& om);
/// Lifting of the p = 1 structure along the free 1-cell.
Pseudomonoid lift_along_f(EmContext& ctx, const OidalMonad& om);
/// Both at once, interchange cells through the square action.
Duoidal lift_duoidal(EmContext& ctx, const OidalMonad& om);

DuoidalAlt duoidal_to_alt(const Duoidal& d);
Duoidal duoidal_from_alt(const DuoidalAlt& d);

MndPseudomonoid oidal_to_mnd(const OidalMonad& om);       // (0,1) only
OidalMonad oidal_from_mnd(const MndPseudomonoid& mp, const Pseudomonoid& pm);

/// Views of the structure cells as monad morphisms (used by liftings and by
/// the square suites).
MonadMorH opmon_mult_hcell(const OidalMonad& om);
MonadMorH opmon_unit_hcell(const OidalMonad& om);
MonadMorV mon_mult_vcell(const OidalMonad& om);
MonadMorV mon_unit_vcell(const OidalMonad& om);

/// The four interchange cells of a (1,1) structure as squares of the monad
/// double category, in the order xi, xi0, xi_0, xi00.
std::vector<struct MndSquare> interchange_squares(const OidalMonad& om);

}  // namespace oidal
