#pragma once

#include "oidal/em.hpp"

namespace oidal {

struct OidalMonad;  // oidal.hpp

/// A square of the ambient 2-category: body : right.top -> bottom.left.
struct SqrCell {
  Fun top, bottom;  // horizontal
  Fun left, right;  // vertical
  Nat body;
  std::string name;

  bool operator==(const SqrCell& o) const {
    return top == o.top && bottom == o.bottom && left == o.left && right == o.right &&
           body == o.body;
  }
};

/// A square of the monad double category: horizontal edges are monad
/// morphisms, vertical edges the opposite-variance ones, the body a 2-cell
/// satisfying the compatibility hexagon.
struct MndSquare {
  MonadMorH top, bottom;
  MonadMorV left, right;
  Nat body;  // right.f . top.f -> bottom.f . left.f
  std::string name;

  bool operator==(const MndSquare& o) const {
    return top == o.top && bottom == o.bottom && left == o.left && right == o.right &&
           body == o.body;
  }
};

ValidationReport validate_sqr(const SqrCell& c);
ValidationReport validate_mnd_square(const MndSquare& s);

SqrCell sqr_hcomp(const SqrCell& right, const SqrCell& left);
SqrCell sqr_vcomp(const SqrCell& below, const SqrCell& above);
SqrCell sqr_identity_h(const Fun& horizontal);  // trivial verticals
SqrCell sqr_identity_v(const Fun& vertical);    // trivial horizontals

MndSquare mnd_hcomp(const MndSquare& right, const MndSquare& left);
MndSquare mnd_vcomp(const MndSquare& below, const MndSquare& above);
MndSquare mnd_identity_h(const MonadMorH& m);
MndSquare mnd_identity_v(const MonadMorV& m);
MndSquare product_square(const MndSquare& a, const MndSquare& b);

/// Wraps a plain square into the monad double category via trivial monads.
MndSquare inclusion_square(const SqrCell& c);

/// The two-sided action on a square: the unique 2-cell
/// V(right).H(top) -> H(bottom).V(left) factoring the body composite through
/// the chosen coequalizer epis.  Re-verifies serial commutativity first.
Nat K2(EmContext& ctx, const MndSquare& s);

// --- Eilenberg-Moore / inclusion adjunction data ---------------------------

/// (u, 1.eps) : (em, 1) -> (A, t), the counit's horizontal 1-cell.
MonadMorH counit_hcell(EmContext& ctx, const Monad& m);
/// (f, eps.1) : (A, t) -> (em, 1), the free-side vertical 1-cell.
MonadMorV free_vcell(EmContext& ctx, const Monad& m);
/// The counit's square at a vertical 1-cell.
MndSquare counit_square(EmContext& ctx, const MonadMorV& g);
/// The free-side 2-cell f^s.h -> H(h).f^t of the unit-side transformation.
Nat free_side_cell(EmContext& ctx, const MonadMorH& h);
/// The unit-side square at a horizontal 1-cell.
MndSquare free_side_square(EmContext& ctx, const MonadMorH& h);

/// Counit and unit modification squares for one monad.
MndSquare counit_modification(EmContext& ctx, const Monad& m);
MndSquare unit_modification(EmContext& ctx, const Monad& m);
/// Both pasted triangles evaluate to identity 2-cells.
bool orthogonal_triangles(EmContext& ctx, const Monad& m);

/// Horizontal naturality of the counit at a square: pasting the included
/// image square with the counit square on one side agrees with pasting the
/// counit square with the original on the other.
bool counit_naturality(EmContext& ctx, const MndSquare& s);

/// Fixture-level verification that the free-side lifting described by the
/// right adjoint on monoidal monads satisfies the expected universal data:
/// the lift validates and the forgetful 1-cell is monoidal from the lifted
/// structure to the base one.
ValidationReport em_in_M10_check(EmContext& ctx, const OidalMonad& om);

}  // namespace oidal
