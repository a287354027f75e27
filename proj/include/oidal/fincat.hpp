#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "oidal/base.hpp"

namespace oidal {

struct Mor {
  Id name, src, dst;
  bool operator==(const Mor& o) const {
    return name == o.name && src == o.src && dst == o.dst;
  }
};

/// A finite category: object list, morphism list, identity assignment and a
/// total composition table on composable pairs.  Object and morphism lists
/// are kept sorted by name so that categories built by different routes
/// compare equal as stored data whenever they agree mathematically.
class FinCat {
 public:
  std::string label;  // diagnostic only, ignored by operator==
  std::vector<Id> objects;
  std::vector<Mor> morphisms;
  std::map<Id, Id> identities;                 // object -> morphism
  std::map<std::pair<Id, Id>, Id> table;       // (g, f) -> g.f

  static std::shared_ptr<const FinCat> make(std::string label, std::vector<Id> objects,
                                            std::vector<Mor> morphisms,
                                            std::map<Id, Id> identities,
                                            std::map<std::pair<Id, Id>, Id> table);

  bool has_object(const Id& x) const { return object_set_.count(x) > 0; }
  bool has_mor(const Id& f) const { return mor_index_.count(f) > 0; }
  const Mor& mor(const Id& f) const;
  Id id_of(const Id& x) const;
  std::optional<Id> compose_opt(const Id& g, const Id& f) const;
  Id compose(const Id& g, const Id& f) const;  // throws BoundaryError if absent
  const std::vector<Id>& hom(const Id& x, const Id& y) const;
  bool is_identity(const Id& f) const;
  /// Thin: at most one morphism between any two objects.
  bool thin() const { return thin_; }
  int obj_width() const { return obj_width_; }
  int mor_width() const { return mor_width_; }

  bool operator==(const FinCat& o) const {
    if (this == &o) return true;
    return objects == o.objects && morphisms == o.morphisms &&
           identities == o.identities && table == o.table;
  }
  bool operator!=(const FinCat& o) const { return !(*this == o); }

 private:
  std::set<Id> object_set_;
  std::map<Id, std::size_t> mor_index_;
  std::map<std::pair<Id, Id>, std::vector<Id>> homs_;
  std::vector<Id> empty_hom_;
  bool thin_ = true;
  int obj_width_ = -1;  // -1: no objects
  int mor_width_ = -1;
};

using CatPtr = std::shared_ptr<const FinCat>;

struct Fun {
  CatPtr src, dst;
  std::map<Id, Id> obj_map, mor_map;
  std::string label;

  Id ob(const Id& x) const;
  Id mo(const Id& f) const;
  bool operator==(const Fun& o) const {
    return *src == *o.src && *dst == *o.dst && obj_map == o.obj_map && mor_map == o.mor_map;
  }
  bool operator!=(const Fun& o) const { return !(*this == o); }
};

struct Nat {
  Fun src, dst;
  std::map<Id, Id> components;  // object of src.src -> morphism of src.dst
  std::string label;

  Id at(const Id& x) const;
  bool operator==(const Nat& o) const {
    return src == o.src && dst == o.dst && components == o.components;
  }
  bool operator!=(const Nat& o) const { return !(*this == o); }
};

// --- validation -------------------------------------------------------------

ValidationReport validate_category(const FinCat& c);
ValidationReport validate_functor(const Fun& f);
ValidationReport validate_nat(const Nat& n);

// --- 1- and 2-cell operations ----------------------------------------------

Fun identity_fun(CatPtr a);
Fun compose_fun(const Fun& g, const Fun& f);
Nat identity_nat(const Fun& f);
Nat vcomp(const Nat& beta, const Nat& alpha);
Nat whisker_left(const Fun& h, const Nat& a);   // h.a
Nat whisker_right(const Nat& a, const Fun& k);  // a.k
Nat hcomp_nat(const Nat& beta, const Nat& alpha);
/// The unique natural transformation f -> g in a thin codomain; throws when a
/// component is missing (or the codomain is not thin and choice is ambiguous).
Nat nat_between(const Fun& f, const Fun& g);
/// Builds a nat from an explicit component assignment and checks naturality.
Nat nat_from_components(const Fun& f, const Fun& g, const std::map<Id, Id>& comps);
bool nat_invertible(const Nat& n);
Nat nat_inverse(const Nat& n);

// --- monoidal structure ------------------------------------------------------

CatPtr terminal_category();
CatPtr product(CatPtr a, CatPtr b);
Fun product_fun(const Fun& f, const Fun& g);
Nat product_nat(const Nat& a, const Nat& b);
/// The symmetry component at (a, b): the flip functor a x b -> b x a.
Fun flip(CatPtr a, CatPtr b);
/// Inverse of the pairing: splits an object/morphism name of a x b.
std::pair<Id, Id> split_pair(const FinCat& a, const FinCat& b, const Id& name, bool morphism);

/// Functor I -> a picking an object (used for pseudomonoid units).
Fun point(CatPtr a, const Id& obj);

}  // namespace oidal
