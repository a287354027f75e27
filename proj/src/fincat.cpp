#include "oidal/fincat.hpp"

#include <algorithm>
#include <mutex>

namespace oidal {

namespace {

std::string mor_desc(const Mor& m) { return m.name + ":" + m.src + "->" + m.dst; }

int uniform_width(const std::vector<std::string>& names, const std::string& what,
                  const std::string& label) {
  int w = -1;
  for (const auto& n : names) {
    int k = static_cast<int>(name_components(n).size());
    if (w == -1) w = k;
    if (k != w) {
      throw InputError("category " + label + ": mixed tuple widths among " + what +
                       " (" + n + ")");
    }
  }
  return w;
}

}  // namespace

CatPtr FinCat::make(std::string label, std::vector<Id> objects, std::vector<Mor> morphisms,
                    std::map<Id, Id> identities, std::map<std::pair<Id, Id>, Id> table) {
  auto c = std::make_shared<FinCat>();
  c->label = std::move(label);
  c->objects = std::move(objects);
  c->morphisms = std::move(morphisms);
  c->identities = std::move(identities);
  c->table = std::move(table);

  std::sort(c->objects.begin(), c->objects.end());
  std::sort(c->morphisms.begin(), c->morphisms.end(),
            [](const Mor& a, const Mor& b) { return a.name < b.name; });
  if (std::adjacent_find(c->objects.begin(), c->objects.end()) != c->objects.end())
    throw InputError("category " + c->label + ": duplicate object name");

  c->object_set_.insert(c->objects.begin(), c->objects.end());
  for (std::size_t i = 0; i < c->morphisms.size(); ++i) {
    const Mor& m = c->morphisms[i];
    if (!c->object_set_.count(m.src) || !c->object_set_.count(m.dst))
      throw InputError("category " + c->label + ": morphism " + mor_desc(m) +
                       " has unknown endpoint");
    if (!c->mor_index_.emplace(m.name, i).second)
      throw InputError("category " + c->label + ": duplicate morphism name " + m.name);
  }
  for (const Mor& m : c->morphisms) {
    auto& h = c->homs_[{m.src, m.dst}];
    h.push_back(m.name);
    if (h.size() > 1) c->thin_ = false;
  }

  std::vector<std::string> mor_names;
  for (const Mor& m : c->morphisms) mor_names.push_back(m.name);
  c->obj_width_ = uniform_width(c->objects, "objects", c->label);
  c->mor_width_ = uniform_width(mor_names, "morphisms", c->label);
  return c;
}

const Mor& FinCat::mor(const Id& f) const {
  auto it = mor_index_.find(f);
  if (it == mor_index_.end())
    throw BoundaryError("category " + label + ": unknown morphism " + f);
  return morphisms[it->second];
}

Id FinCat::id_of(const Id& x) const {
  auto it = identities.find(x);
  if (it == identities.end())
    throw BoundaryError("category " + label + ": no identity for " + x);
  return it->second;
}

std::optional<Id> FinCat::compose_opt(const Id& g, const Id& f) const {
  auto it = table.find({g, f});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Id FinCat::compose(const Id& g, const Id& f) const {
  auto r = compose_opt(g, f);
  if (!r)
    throw BoundaryError("category " + label + ": no composite " + g + " . " + f);
  return *r;
}

const std::vector<Id>& FinCat::hom(const Id& x, const Id& y) const {
  auto it = homs_.find({x, y});
  return it == homs_.end() ? empty_hom_ : it->second;
}

bool FinCat::is_identity(const Id& f) const {
  const Mor& m = mor(f);
  return m.src == m.dst && id_of(m.src) == f;
}

Id Fun::ob(const Id& x) const {
  auto it = obj_map.find(x);
  if (it == obj_map.end())
    throw BoundaryError("functor " + label + ": no image for object " + x);
  return it->second;
}

Id Fun::mo(const Id& f) const {
  auto it = mor_map.find(f);
  if (it == mor_map.end())
    throw BoundaryError("functor " + label + ": no image for morphism " + f);
  return it->second;
}

Id Nat::at(const Id& x) const {
  auto it = components.find(x);
  if (it == components.end())
    throw BoundaryError("nat " + label + ": no component at " + x);
  return it->second;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_category(const FinCat& c) {
  ValidationReport rep;
  rep.subject = "category " + c.label;

  for (const Id& x : c.objects) {
    auto it = c.identities.find(x);
    if (it == c.identities.end()) {
      rep.add("identity-assignment", "object " + x + " has no identity");
      continue;
    }
    if (!c.has_mor(it->second)) {
      rep.add("identity-assignment", "identity of " + x + " is unknown morphism");
      continue;
    }
    const Mor& m = c.mor(it->second);
    if (m.src != x || m.dst != x)
      rep.add("identity-assignment", "identity of " + x + " is " + mor_desc(m));
  }
  for (const auto& [x, f] : c.identities)
    if (!c.has_object(x)) rep.add("identity-assignment", "identity for unknown object " + x);

  // Totality: entries exactly on composable pairs, landing in the right hom set.
  for (const Mor& g : c.morphisms) {
    for (const Mor& f : c.morphisms) {
      bool composable = (g.src == f.dst);
      auto entry = c.compose_opt(g.name, f.name);
      if (composable && !entry) {
        rep.add("composition-totality", "missing (" + g.name + "," + f.name + ")");
      } else if (!composable && entry) {
        rep.add("composition-totality",
                "spurious entry (" + g.name + "," + f.name + ")");
      } else if (entry) {
        if (!c.has_mor(*entry)) {
          rep.add("composition-totality",
                  "(" + g.name + "," + f.name + ") maps to unknown " + *entry);
        } else {
          const Mor& gf = c.mor(*entry);
          if (gf.src != f.src || gf.dst != g.dst)
            rep.add("composition-boundaries",
                    "(" + g.name + "," + f.name + ") = " + mor_desc(gf));
        }
      }
    }
  }
  if (!rep.ok()) return rep;  // laws below presuppose a well-formed table

  for (const Mor& f : c.morphisms) {
    if (c.compose(f.name, c.id_of(f.src)) != f.name)
      rep.add("right-identity", f.name + " . id_" + f.src);
    if (c.compose(c.id_of(f.dst), f.name) != f.name)
      rep.add("left-identity", "id_" + f.dst + " . " + f.name);
  }

  for (const Mor& f : c.morphisms) {
    for (const Mor& g : c.morphisms) {
      if (g.src != f.dst) continue;
      Id gf = c.compose(g.name, f.name);
      for (const Mor& h : c.morphisms) {
        if (h.src != g.dst) continue;
        Id hg = c.compose(h.name, g.name);
        if (c.compose(h.name, gf) != c.compose(hg, f.name))
          rep.add("associativity",
                  "(" + h.name + "," + g.name + "," + f.name + ")");
      }
    }
  }
  return rep;
}

ValidationReport validate_functor(const Fun& f) {
  ValidationReport rep;
  rep.subject = "functor " + f.label;
  const FinCat& a = *f.src;
  const FinCat& b = *f.dst;

  for (const Id& x : a.objects) {
    auto it = f.obj_map.find(x);
    if (it == f.obj_map.end())
      rep.add("object-map", "no image for " + x);
    else if (!b.has_object(it->second))
      rep.add("object-map", x + " -> unknown " + it->second);
  }
  if (f.obj_map.size() != a.objects.size()) rep.add("object-map", "extra entries");
  for (const Mor& m : a.morphisms) {
    auto it = f.mor_map.find(m.name);
    if (it == f.mor_map.end()) {
      rep.add("morphism-map", "no image for " + m.name);
      continue;
    }
    if (!b.has_mor(it->second)) {
      rep.add("morphism-map", m.name + " -> unknown " + it->second);
      continue;
    }
    const Mor& im = b.mor(it->second);
    if (im.src != f.obj_map.at(m.src) || im.dst != f.obj_map.at(m.dst))
      rep.add("boundary-preservation", m.name + " -> " + mor_desc(im));
  }
  if (f.mor_map.size() != a.morphisms.size()) rep.add("morphism-map", "extra entries");
  if (!rep.ok()) return rep;

  for (const Id& x : a.objects)
    if (f.mo(a.id_of(x)) != b.id_of(f.ob(x)))
      rep.add("identity-preservation", "at " + x);
  for (const auto& [gf, c] : a.table) {
    Id img = b.compose(f.mo(gf.first), f.mo(gf.second));
    if (img != f.mo(c))
      rep.add("composition-preservation", "(" + gf.first + "," + gf.second + ")");
  }
  return rep;
}

ValidationReport validate_nat(const Nat& n) {
  ValidationReport rep;
  rep.subject = "nat " + n.label;
  if (*n.src.src != *n.dst.src || *n.src.dst != *n.dst.dst) {
    rep.add("boundary", "source and target functors have different boundaries");
    return rep;
  }
  const FinCat& a = *n.src.src;
  const FinCat& b = *n.src.dst;
  for (const Id& x : a.objects) {
    auto it = n.components.find(x);
    if (it == n.components.end()) {
      rep.add("component", "missing at " + x);
      continue;
    }
    if (!b.has_mor(it->second)) {
      rep.add("component", "unknown morphism at " + x);
      continue;
    }
    const Mor& m = b.mor(it->second);
    if (m.src != n.src.ob(x) || m.dst != n.dst.ob(x))
      rep.add("component-boundary", "at " + x + ": " + mor_desc(m));
  }
  if (n.components.size() != a.objects.size()) rep.add("component", "extra entries");
  if (!rep.ok()) return rep;

  for (const Mor& m : a.morphisms) {
    Id lhs = b.compose(n.at(m.dst), n.src.mo(m.name));
    Id rhs = b.compose(n.dst.mo(m.name), n.at(m.src));
    if (lhs != rhs) rep.add("naturality", "at " + m.name);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Cell operations

Fun identity_fun(CatPtr a) {
  Fun f;
  f.src = f.dst = a;
  f.label = "1_" + a->label;
  for (const Id& x : a->objects) f.obj_map[x] = x;
  for (const Mor& m : a->morphisms) f.mor_map[m.name] = m.name;
  return f;
}

Fun compose_fun(const Fun& g, const Fun& f) {
  if (*f.dst != *g.src)
    throw BoundaryError("compose_fun: middle categories differ (" + g.label + " . " +
                        f.label + ")");
  Fun h;
  h.src = f.src;
  h.dst = g.dst;
  h.label = g.label + "." + f.label;
  for (const auto& [x, y] : f.obj_map) h.obj_map[x] = g.ob(y);
  for (const auto& [m, n] : f.mor_map) h.mor_map[m] = g.mo(n);
  return h;
}

Nat identity_nat(const Fun& f) {
  Nat n;
  n.src = n.dst = f;
  n.label = "1_" + f.label;
  for (const Id& x : f.src->objects) n.components[x] = f.dst->id_of(f.ob(x));
  return n;
}

Nat vcomp(const Nat& beta, const Nat& alpha) {
  if (beta.src != alpha.dst)
    throw BoundaryError("vcomp: boundary mismatch (" + beta.label + " . " + alpha.label +
                        ")");
  Nat n;
  n.src = alpha.src;
  n.dst = beta.dst;
  n.label = beta.label + "*" + alpha.label;
  for (const Id& x : alpha.src.src->objects)
    n.components[x] = alpha.src.dst->compose(beta.at(x), alpha.at(x));
  return n;
}

Nat whisker_left(const Fun& h, const Nat& a) {
  if (*a.src.dst != *h.src)
    throw BoundaryError("whisker_left: boundary mismatch");
  Nat n;
  n.src = compose_fun(h, a.src);
  n.dst = compose_fun(h, a.dst);
  n.label = h.label + "." + a.label;
  for (const auto& [x, c] : a.components) n.components[x] = h.mo(c);
  return n;
}

Nat whisker_right(const Nat& a, const Fun& k) {
  if (*k.dst != *a.src.src)
    throw BoundaryError("whisker_right: boundary mismatch");
  Nat n;
  n.src = compose_fun(a.src, k);
  n.dst = compose_fun(a.dst, k);
  n.label = a.label + "." + k.label;
  for (const Id& x : k.src->objects) n.components[x] = a.at(k.ob(x));
  return n;
}

Nat hcomp_nat(const Nat& beta, const Nat& alpha) {
  // beta: g -> g' over (B -> C), alpha: f -> f' over (A -> B).
  return vcomp(whisker_right(beta, alpha.dst), whisker_left(beta.src, alpha));
}

Nat nat_between(const Fun& f, const Fun& g) {
  if (*f.src != *g.src || *f.dst != *g.dst)
    throw BoundaryError("nat_between: functor boundaries differ");
  Nat n;
  n.src = f;
  n.dst = g;
  n.label = f.label + "=>" + g.label;
  const FinCat& b = *f.dst;
  for (const Id& x : f.src->objects) {
    const auto& h = b.hom(f.ob(x), g.ob(x));
    if (h.empty())
      throw BoundaryError("nat_between: no morphism " + f.ob(x) + " -> " + g.ob(x));
    if (h.size() > 1)
      throw BoundaryError("nat_between: ambiguous component at " + x +
                          " (codomain not thin)");
    n.components[x] = h.front();
  }
  require_valid(validate_nat(n));
  return n;
}

Nat nat_from_components(const Fun& f, const Fun& g, const std::map<Id, Id>& comps) {
  Nat n;
  n.src = f;
  n.dst = g;
  n.components = comps;
  require_valid(validate_nat(n));
  return n;
}

bool nat_invertible(const Nat& n) {
  const FinCat& b = *n.src.dst;
  for (const auto& [x, c] : n.components) {
    const Mor& m = b.mor(c);
    bool has_inverse = false;
    for (const Id& r : b.hom(m.dst, m.src)) {
      if (b.compose(r, c) == b.id_of(m.src) && b.compose(c, r) == b.id_of(m.dst)) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) return false;
  }
  return true;
}

Nat nat_inverse(const Nat& n) {
  const FinCat& b = *n.src.dst;
  Nat inv;
  inv.src = n.dst;
  inv.dst = n.src;
  inv.label = n.label + "^-1";
  for (const auto& [x, c] : n.components) {
    const Mor& m = b.mor(c);
    std::optional<Id> found;
    for (const Id& r : b.hom(m.dst, m.src)) {
      if (b.compose(r, c) == b.id_of(m.src) && b.compose(c, r) == b.id_of(m.dst)) {
        found = r;
        break;
      }
    }
    if (!found) throw BoundaryError("nat_inverse: component at " + x + " not invertible");
    inv.components[x] = *found;
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Monoidal structure

CatPtr terminal_category() {
  static CatPtr unit = [] {
    std::vector<Mor> ms{{"()", "()", "()"}};
    std::map<Id, Id> ids{{"()", "()"}};
    std::map<std::pair<Id, Id>, Id> t{{{"()", "()"}, "()"}};
    return FinCat::make("I", {"()"}, std::move(ms), std::move(ids), std::move(t));
  }();
  return unit;
}

namespace {

// Product categories are rebuilt constantly by whiskering helpers; memoize
// them so repeated constructions share one object.
std::vector<std::tuple<CatPtr, CatPtr, CatPtr>>& product_cache() {
  static std::vector<std::tuple<CatPtr, CatPtr, CatPtr>> cache;
  return cache;
}
std::mutex& product_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

CatPtr product(CatPtr a, CatPtr b) {
  {
    std::lock_guard<std::mutex> lock(product_mutex());
    for (const auto& [ca, cb, r] : product_cache())
      if (*ca == *a && *cb == *b) return r;
  }
  require_under_cap(a->morphisms.size() * b->morphisms.size(),
                    "product " + a->label + " x " + b->label);
  std::vector<Id> objs;
  for (const Id& x : a->objects)
    for (const Id& y : b->objects) objs.push_back(pair_name(x, y));
  std::vector<Mor> mors;
  for (const Mor& m : a->morphisms)
    for (const Mor& n : b->morphisms)
      mors.push_back({pair_name(m.name, n.name), pair_name(m.src, n.src),
                      pair_name(m.dst, n.dst)});
  std::map<Id, Id> ids;
  for (const Id& x : a->objects)
    for (const Id& y : b->objects)
      ids[pair_name(x, y)] = pair_name(a->id_of(x), b->id_of(y));
  std::map<std::pair<Id, Id>, Id> table;
  for (const auto& [gf, c] : a->table)
    for (const auto& [gf2, c2] : b->table)
      table[{pair_name(gf.first, gf2.first), pair_name(gf.second, gf2.second)}] =
          pair_name(c, c2);
  CatPtr result = FinCat::make(a->label + "x" + b->label, std::move(objs),
                               std::move(mors), std::move(ids), std::move(table));
  std::lock_guard<std::mutex> lock(product_mutex());
  product_cache().push_back({a, b, result});
  return result;
}

std::pair<Id, Id> split_pair(const FinCat& a, const FinCat& b, const Id& name,
                             bool morphism) {
  int wa = morphism ? a.mor_width() : a.obj_width();
  auto parts = name_components(name);
  int total = static_cast<int>(parts.size());
  int wb = morphism ? b.mor_width() : b.obj_width();
  if (wa < 0 || wb < 0 || wa + wb != total)
    throw BoundaryError("split_pair: " + name + " does not split into widths " +
                        std::to_string(wa) + "+" + std::to_string(wb));
  std::vector<std::string> left(parts.begin(), parts.begin() + wa);
  std::vector<std::string> right(parts.begin() + wa, parts.end());
  return {make_tuple_name(left), make_tuple_name(right)};
}

Fun product_fun(const Fun& f, const Fun& g) {
  Fun h;
  h.src = product(f.src, g.src);
  h.dst = product(f.dst, g.dst);
  h.label = f.label + "(x)" + g.label;
  for (const auto& [x, x2] : f.obj_map)
    for (const auto& [y, y2] : g.obj_map)
      h.obj_map[pair_name(x, y)] = pair_name(x2, y2);
  for (const auto& [m, m2] : f.mor_map)
    for (const auto& [n, n2] : g.mor_map)
      h.mor_map[pair_name(m, n)] = pair_name(m2, n2);
  return h;
}

Nat product_nat(const Nat& a, const Nat& b) {
  Nat n;
  n.src = product_fun(a.src, b.src);
  n.dst = product_fun(a.dst, b.dst);
  n.label = a.label + "(x)" + b.label;
  for (const auto& [x, c] : a.components)
    for (const auto& [y, d] : b.components) n.components[pair_name(x, y)] = pair_name(c, d);
  return n;
}

Fun flip(CatPtr a, CatPtr b) {
  Fun s;
  s.src = product(a, b);
  s.dst = product(b, a);
  s.label = "flip_" + a->label + "," + b->label;
  for (const Id& x : a->objects)
    for (const Id& y : b->objects) s.obj_map[pair_name(x, y)] = pair_name(y, x);
  for (const Mor& m : a->morphisms)
    for (const Mor& n : b->morphisms)
      s.mor_map[pair_name(m.name, n.name)] = pair_name(n.name, m.name);
  return s;
}

Fun point(CatPtr a, const Id& obj) {
  if (!a->has_object(obj)) throw BoundaryError("point: unknown object " + obj);
  Fun f;
  f.src = terminal_category();
  f.dst = a;
  f.label = "pt_" + obj;
  f.obj_map["()"] = obj;
  f.mor_map["()"] = a->id_of(obj);
  return f;
}

}  // namespace oidal
