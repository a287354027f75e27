#pragma once

#include <string>

#include "oidal/dblcat.hpp"
#include "oidal/oidal.hpp"

namespace oidal {

/// A named collection of fixture data loaded from a directory of JSON files.
struct FixtureSet {
  std::map<std::string, CatPtr> categories;
  std::map<std::string, Fun> functors;
  std::map<std::string, Nat> nats;
  std::map<std::string, Monad> monads;
  std::map<std::string, MonadMorH> hmors;
  std::map<std::string, MonadMorV> vmors;
  std::map<std::string, Pseudomonoid> pseudomonoids;
  std::map<std::string, Duoidal> duoidals;
  std::map<std::string, OidalMonad> oidal_monads;
  std::map<std::string, MndSquare> squares;
  std::map<std::string, std::string> provenance;
};

/// Loads every *.json file under `dir`.  With `collect` null, any validation
/// failure throws InputError; otherwise violations are appended and loading
/// continues where structurally possible.
FixtureSet load_fixture_dir(const std::string& dir, ValidationReport* collect = nullptr);

/// Runs all validators over a loaded set.
ValidationReport validate_fixture_set(const FixtureSet& fs);

// --- programmatic builders (shared by the loader and the test suites) ------

/// Thin category of a finite preorder; morphisms are named "x<=y" with the
/// two-character ASCII arrowless form replaced by the order glyph.
CatPtr poset_category(const std::string& label, const std::vector<Id>& elements,
                      const std::vector<std::pair<Id, Id>>& leq);

/// Monotone idempotent inflationary map on a thin category, as a monad.
Monad closure_monad(const std::string& name, CatPtr base, const std::map<Id, Id>& cl);

/// Functor between thin categories determined by its object map.
Fun monotone_fun(const std::string& label, CatPtr src, CatPtr dst,
                 const std::map<Id, Id>& obj_map);

/// Pseudomonoid with identity coherence cells (strict monoid structure).
Pseudomonoid strict_pseudomonoid(const std::string& name, CatPtr base, const Fun& mult,
                                 const Id& unit_obj);

}  // namespace oidal
