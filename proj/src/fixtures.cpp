#include "oidal/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace oidal {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kLeq = "\xe2\x89\xa4";  // order glyph for poset morphism names

std::string leq_name(const Id& x, const Id& y) { return x + kLeq + y; }

void check_user_id(const std::string& s, const std::string& where) {
  if (!valid_user_id(s))
    throw InputError(where + ": invalid identifier \"" + s + "\" (reserved characters)");
}

struct Loader {
  FixtureSet set;
  ValidationReport* collect = nullptr;
  // raw section entries: name -> (json, source file)
  std::map<std::string, std::map<std::string, json>> sections;

  void fail(const std::string& subject, const std::string& msg) {
    if (collect)
      collect->add(subject, msg);
    else
      throw InputError(subject + ": " + msg);
  }

  void note(const ValidationReport& rep) {
    if (rep.ok()) return;
    if (!collect) throw InputError(rep.summary());
    for (const auto& v : rep.violations) collect->add(rep.subject + "/" + v.law, v.witness);
  }

  void gather(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open " + file.string());
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError("parse error in " + file.string() + ": " + e.what());
    }
    if (!j.is_object()) throw InputError(file.string() + ": top level must be an object");
    for (auto& [section, entries] : j.items()) {
      if (!entries.is_object())
        throw InputError(file.string() + ": section " + section + " must be an object");
      for (auto& [name, payload] : entries.items()) {
        if (sections[section].count(name))
          throw InputError("duplicate fixture name " + section + "/" + name);
        sections[section][name] = payload;
      }
    }
  }

  // --- resolution helpers ---------------------------------------------------

  CatPtr cat(const json& ref, const std::string& where) {
    if (!ref.is_string()) throw InputError(where + ": category reference must be a string");
    return category(ref.get<std::string>());
  }

  CatPtr category(const std::string& name) {
    auto it = set.categories.find(name);
    if (it != set.categories.end()) return it->second;
    auto raw = sections["categories"].find(name);
    if (raw == sections["categories"].end())
      throw InputError("unresolved category reference " + name);
    CatPtr c = build_category(name, raw->second);
    set.categories.emplace(name, c);
    return c;
  }

  CatPtr build_category(const std::string& name, const json& j) {
    const std::string where = "category " + name;
    if (j.contains("poset")) {
      const json& p = j.at("poset");
      std::vector<Id> elems = p.at("elements").get<std::vector<Id>>();
      std::vector<std::pair<Id, Id>> leq;
      for (const auto& pr : p.at("leq"))
        leq.push_back({pr.at(0).get<Id>(), pr.at(1).get<Id>()});
      for (const Id& e : elems) check_user_id(e, where);
      return poset_category(name, elems, leq);
    }
    if (j.contains("product")) {
      const json& p = j.at("product");
      return product(cat(p.at(0), where), cat(p.at(1), where));
    }
    if (j.contains("terminal")) return terminal_category();

    std::vector<Id> objects = j.at("objects").get<std::vector<Id>>();
    for (const Id& o : objects) check_user_id(o, where);
    std::vector<Mor> morphisms;
    for (const auto& m : j.at("morphisms")) {
      Mor mm{m.at("name").get<Id>(), m.at("src").get<Id>(), m.at("dst").get<Id>()};
      check_user_id(mm.name, where);
      morphisms.push_back(mm);
    }
    std::map<Id, Id> identities;
    for (auto& [o, i] : j.at("identities").items()) identities[o] = i.get<Id>();
    std::map<std::pair<Id, Id>, Id> table;
    for (const auto& t : j.at("composition"))
      table[{t.at(0).get<Id>(), t.at(1).get<Id>()}] = t.at(2).get<Id>();
    CatPtr c = FinCat::make(name, std::move(objects), std::move(morphisms),
                            std::move(identities), std::move(table));
    ValidationReport rep = validate_category(*c);
    note(rep);
    return c;
  }

  Fun functor(const std::string& name) {
    auto it = set.functors.find(name);
    if (it != set.functors.end()) return it->second;
    auto raw = sections["functors"].find(name);
    if (raw == sections["functors"].end())
      throw InputError("unresolved functor reference " + name);
    Fun f = build_functor(name, raw->second);
    set.functors.emplace(name, f);
    return f;
  }

  Fun fun_ref(const json& ref, const std::string& where) {
    if (!ref.is_string()) throw InputError(where + ": functor reference must be a string");
    return functor(ref.get<std::string>());
  }

  Fun build_functor(const std::string& name, const json& j) {
    const std::string where = "functor " + name;
    Fun f;
    f.src = cat(j.at("src"), where);
    f.dst = cat(j.at("dst"), where);
    f.label = name;
    if (j.contains("identity") && j.at("identity").get<bool>()) {
      f = identity_fun(f.src);
      f.label = name;
      return f;
    }
    for (auto& [x, y] : j.at("obj_map").items()) f.obj_map[x] = y.get<Id>();
    if (!j.contains("mor_map") || j.at("mor_map") == "auto") {
      for (const Mor& m : f.src->morphisms) {
        const auto& h = f.dst->hom(f.obj_map.at(m.src), f.obj_map.at(m.dst));
        if (h.size() != 1) {
          fail(where, "cannot derive image of " + m.name);
          return f;
        }
        f.mor_map[m.name] = h.front();
      }
    } else {
      for (auto& [m, n] : j.at("mor_map").items()) f.mor_map[m] = n.get<Id>();
    }
    note(validate_functor(f));
    return f;
  }

  Nat nat(const std::string& name) {
    auto it = set.nats.find(name);
    if (it != set.nats.end()) return it->second;
    auto raw = sections["nats"].find(name);
    if (raw == sections["nats"].end()) throw InputError("unresolved nat reference " + name);
    Nat n = build_nat(name, raw->second);
    set.nats.emplace(name, n);
    return n;
  }

  Nat checked_nat(const Fun& src, const Fun& dst, std::map<Id, Id> comps,
                  const std::string& label) {
    Nat n;
    n.src = src;
    n.dst = dst;
    n.components = std::move(comps);
    n.label = label;
    note(validate_nat(n));
    return n;
  }

  Nat build_nat(const std::string& name, const json& j) {
    const std::string where = "nat " + name;
    Fun src = fun_ref(j.at("src"), where);
    Fun dst = fun_ref(j.at("dst"), where);
    if (!j.contains("components") || j.at("components") == "auto") {
      Nat n = nat_between(src, dst);
      n.label = name;
      return n;
    }
    std::map<Id, Id> comps;
    for (auto& [x, c] : j.at("components").items()) comps[x] = c.get<Id>();
    return checked_nat(src, dst, std::move(comps), name);
  }

  /// A structure 2-cell given either by a nat reference, "auto" (unique cell
  /// between the stated composites in a thin codomain), or explicit
  /// components.
  Nat structure_cell(const json& j, const Fun& src, const Fun& dst,
                     const std::string& where) {
    if (j.is_string()) {
      if (j == "auto") return nat_between(src, dst);
      Nat n = nat(j.get<std::string>());
      if (n.src != src || n.dst != dst) fail(where, "referenced nat has wrong boundary");
      return n;
    }
    std::map<Id, Id> comps;
    for (auto& [x, c] : j.items()) comps[x] = c.get<Id>();
    return checked_nat(src, dst, std::move(comps), where);
  }

  Monad monad(const std::string& name) {
    auto it = set.monads.find(name);
    if (it != set.monads.end()) return it->second;
    auto raw = sections["monads"].find(name);
    if (raw == sections["monads"].end())
      throw InputError("unresolved monad reference " + name);
    Monad m = build_monad(name, raw->second);
    set.monads.emplace(name, m);
    return m;
  }

  Monad build_monad(const std::string& name, const json& j) {
    const std::string where = "monad " + name;
    CatPtr base = cat(j.at("category"), where);
    if (j.contains("closure")) {
      std::map<Id, Id> cl;
      for (auto& [x, y] : j.at("closure").at("map").items()) cl[x] = y.get<Id>();
      Monad m = closure_monad(name, base, cl);
      note(validate_monad(m));
      return m;
    }
    if (j.contains("identity") && j.at("identity").get<bool>()) {
      return identity_monad(base, name);
    }
    Monad m;
    m.base = base;
    m.name = name;
    m.endo = fun_ref(j.at("endofunctor"), where);
    m.mult = structure_cell(j.at("mu"), compose_fun(m.endo, m.endo), m.endo, where);
    m.unit = structure_cell(j.at("eta"), identity_fun(base), m.endo, where);
    note(validate_monad(m));
    return m;
  }

  MonadMorH hmor(const std::string& name) {
    auto it = set.hmors.find(name);
    if (it != set.hmors.end()) return it->second;
    auto raw = sections["hmors"].find(name);
    if (raw == sections["hmors"].end()) throw InputError("unresolved hmor reference " + name);
    const json& j = raw->second;
    const std::string where = "hmor " + name;
    MonadMorH c;
    c.src = monad(j.at("src").get<std::string>());
    c.dst = monad(j.at("dst").get<std::string>());
    c.f = fun_ref(j.at("functor"), where);
    c.chi = structure_cell(j.value("chi", json("auto")), compose_fun(c.dst.endo, c.f),
                           compose_fun(c.f, c.src.endo), where);
    c.name = name;
    note(validate_monad_mor(c));
    set.hmors.emplace(name, c);
    return c;
  }

  MonadMorV vmor(const std::string& name) {
    auto it = set.vmors.find(name);
    if (it != set.vmors.end()) return it->second;
    auto raw = sections["vmors"].find(name);
    if (raw == sections["vmors"].end()) throw InputError("unresolved vmor reference " + name);
    const json& j = raw->second;
    const std::string where = "vmor " + name;
    MonadMorV c;
    c.src = monad(j.at("src").get<std::string>());
    c.dst = monad(j.at("dst").get<std::string>());
    c.f = fun_ref(j.at("functor"), where);
    c.chi = structure_cell(j.value("chi", json("auto")), compose_fun(c.f, c.src.endo),
                           compose_fun(c.dst.endo, c.f), where);
    c.name = name;
    note(validate_monad_mor(c));
    set.vmors.emplace(name, c);
    return c;
  }

  Pseudomonoid pseudomonoid(const std::string& name) {
    auto it = set.pseudomonoids.find(name);
    if (it != set.pseudomonoids.end()) return it->second;
    auto raw = sections["pseudomonoids"].find(name);
    if (raw == sections["pseudomonoids"].end())
      throw InputError("unresolved pseudomonoid reference " + name);
    const json& j = raw->second;
    const std::string where = "pseudomonoid " + name;
    CatPtr base = cat(j.at("base"), where);
    Fun mult = fun_ref(j.at("mult"), where);
    Pseudomonoid p;
    if (j.at("unit").is_string() && base->has_object(j.at("unit").get<std::string>())) {
      p = strict_pseudomonoid(name, base, mult, j.at("unit").get<std::string>());
    } else {
      p.base = base;
      p.mult = mult;
      p.unit = fun_ref(j.at("unit"), where);
      p.name = name;
      Fun one = identity_fun(base);
      Fun idA = one;
      p.assoc = structure_cell(j.value("assoc", json("auto")),
                               compose_fun(mult, product_fun(mult, idA)),
                               compose_fun(mult, product_fun(idA, mult)), where);
      p.lunit = structure_cell(j.value("lunit", json("auto")),
                               compose_fun(mult, product_fun(p.unit, idA)), one, where);
      p.runit = structure_cell(j.value("runit", json("auto")),
                               compose_fun(mult, product_fun(idA, p.unit)), one, where);
    }
    note(validate_pseudomonoid(p));
    set.pseudomonoids.emplace(name, p);
    return p;
  }

  Duoidal duoidal(const std::string& name) {
    auto it = set.duoidals.find(name);
    if (it != set.duoidals.end()) return it->second;
    auto raw = sections["duoidals"].find(name);
    if (raw == sections["duoidals"].end())
      throw InputError("unresolved duoidal reference " + name);
    const json& j = raw->second;
    const std::string where = "duoidal " + name;
    Duoidal d;
    d.pm_h = pseudomonoid(j.at("pm_h").get<std::string>());
    d.pm_v = pseudomonoid(j.at("pm_v").get<std::string>());
    d.name = name;
    CatPtr a = d.pm_h.base;
    Fun mid = middle_flip(a, a);
    Fun mvv = compose_fun(product_fun(d.pm_v.mult, d.pm_v.mult), mid);
    d.xi = structure_cell(j.value("xi", json("auto")),
                          compose_fun(d.pm_v.mult, product_fun(d.pm_h.mult, d.pm_h.mult)),
                          compose_fun(d.pm_h.mult, mvv), where);
    d.xi0 = structure_cell(j.value("xi0", json("auto")), d.pm_v.unit,
                           compose_fun(d.pm_h.mult, product_fun(d.pm_v.unit, d.pm_v.unit)),
                           where);
    d.xi_0 = structure_cell(
        j.value("xi_0", json("auto")),
        compose_fun(d.pm_v.mult, product_fun(d.pm_h.unit, d.pm_h.unit)), d.pm_h.unit, where);
    d.xi00 = structure_cell(j.value("xi00", json("auto")), d.pm_v.unit, d.pm_h.unit, where);
    note(validate_duoidal(d));
    set.duoidals.emplace(name, d);
    return d;
  }

  OidalMonad oidal_monad(const std::string& name) {
    auto it = set.oidal_monads.find(name);
    if (it != set.oidal_monads.end()) return it->second;
    auto raw = sections["oidal_monads"].find(name);
    if (raw == sections["oidal_monads"].end())
      throw InputError("unresolved oidal monad reference " + name);
    const json& j = raw->second;
    const std::string where = "oidal monad " + name;
    OidalMonad om;
    om.name = name;
    om.monad = monad(j.at("monad").get<std::string>());
    om.p = j.at("shape").at(0).get<int>();
    om.q = j.at("shape").at(1).get<int>();
    if (j.contains("pm")) om.pm = pseudomonoid(j.at("pm").get<std::string>());
    if (j.contains("duoidal")) om.duo = duoidal(j.at("duoidal").get<std::string>());

    const Fun& t = om.monad.endo;
    Fun tt = product_fun(t, t);
    if (om.p == 1) {
      const Pseudomonoid& pm = om.duo ? om.duo->pm_v : *om.pm;
      om.mon_binary =
          structure_cell(j.value("mon_binary", json("auto")),
                         compose_fun(pm.mult, tt), compose_fun(t, pm.mult), where);
      om.mon_nullary = structure_cell(j.value("mon_nullary", json("auto")), pm.unit,
                                      compose_fun(t, pm.unit), where);
    }
    if (om.q == 1) {
      const Pseudomonoid& pm = om.duo ? om.duo->pm_h : *om.pm;
      om.opmon_binary =
          structure_cell(j.value("opmon_binary", json("auto")),
                         compose_fun(t, pm.mult), compose_fun(pm.mult, tt), where);
      om.opmon_nullary = structure_cell(j.value("opmon_nullary", json("auto")),
                                        compose_fun(t, pm.unit), pm.unit, where);
    }
    note(validate_oidal_monad(om));
    set.oidal_monads.emplace(name, om);
    return om;
  }

  MndSquare square(const std::string& name) {
    auto it = set.squares.find(name);
    if (it != set.squares.end()) return it->second;
    const json& j = sections["squares"].at(name);
    const std::string where = "square " + name;
    MndSquare s;
    s.top = hmor(j.at("top").get<std::string>());
    s.bottom = hmor(j.at("bottom").get<std::string>());
    s.left = vmor(j.at("left").get<std::string>());
    s.right = vmor(j.at("right").get<std::string>());
    s.body = structure_cell(j.value("body", json("auto")),
                            compose_fun(s.right.f, s.top.f),
                            compose_fun(s.bottom.f, s.left.f), where);
    s.name = name;
    note(validate_mnd_square(s));
    set.squares.emplace(name, s);
    return s;
  }

  template <class Fn>
  void resolve_section(const char* section, Fn&& build) {
    for (const auto& [name, _] : sections[section]) {
      try {
        build(name);
      } catch (const EngineError&) {
        throw;
      } catch (const std::exception& e) {
        throw InputError(std::string(section) + "/" + name + ": " + e.what());
      }
    }
  }

  void resolve_all() {
    resolve_section("categories", [&](const std::string& n) { category(n); });
    resolve_section("functors", [&](const std::string& n) { functor(n); });
    resolve_section("nats", [&](const std::string& n) { nat(n); });
    resolve_section("monads", [&](const std::string& n) { monad(n); });
    resolve_section("hmors", [&](const std::string& n) { hmor(n); });
    resolve_section("vmors", [&](const std::string& n) { vmor(n); });
    resolve_section("pseudomonoids", [&](const std::string& n) { pseudomonoid(n); });
    resolve_section("duoidals", [&](const std::string& n) { duoidal(n); });
    resolve_section("oidal_monads", [&](const std::string& n) { oidal_monad(n); });
    resolve_section("squares", [&](const std::string& n) { square(n); });
    for (const auto& [name, payload] : sections["provenance"])
      set.provenance[name] = payload.get<std::string>();
  }
};

}  // namespace

FixtureSet load_fixture_dir(const std::string& dir, ValidationReport* collect) {
  Loader loader;
  loader.collect = collect;
  if (!fs::exists(dir)) throw InputError("fixture directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) loader.gather(f);
  loader.resolve_all();
  return loader.set;
}

ValidationReport validate_fixture_set(const FixtureSet& fs) {
  ValidationReport rep;
  rep.subject = "fixtures";
  for (const auto& [n, c] : fs.categories) rep.merge(validate_category(*c));
  for (const auto& [n, f] : fs.functors) rep.merge(validate_functor(f));
  for (const auto& [n, a] : fs.nats) rep.merge(validate_nat(a));
  for (const auto& [n, m] : fs.monads) rep.merge(validate_monad(m));
  for (const auto& [n, m] : fs.hmors) rep.merge(validate_monad_mor(m));
  for (const auto& [n, m] : fs.vmors) rep.merge(validate_monad_mor(m));
  for (const auto& [n, p] : fs.pseudomonoids) rep.merge(validate_pseudomonoid(p));
  for (const auto& [n, d] : fs.duoidals) rep.merge(validate_duoidal(d));
  for (const auto& [n, o] : fs.oidal_monads) rep.merge(validate_oidal_monad(o));
  for (const auto& [n, s] : fs.squares) rep.merge(validate_mnd_square(s));
  return rep;
}

CatPtr poset_category(const std::string& label, const std::vector<Id>& elements,
                      const std::vector<std::pair<Id, Id>>& leq) {
  for (const Id& e : elements) check_user_id(e, "poset " + label);
  std::vector<Mor> mors;
  std::map<Id, Id> ids;
  std::map<std::pair<Id, Id>, Id> table;
  std::set<std::pair<Id, Id>> rel(leq.begin(), leq.end());
  for (const Id& x : elements) rel.insert({x, x});
  for (const auto& [x, y] : rel) mors.push_back({leq_name(x, y), x, y});
  for (const Id& x : elements) ids[x] = leq_name(x, x);
  for (const auto& [x, y] : rel)
    for (const auto& [y2, z] : rel)
      if (y == y2) {
        if (!rel.count({x, z}))
          throw InputError("poset " + label + ": relation not transitive at (" + x + "," +
                           y + "," + z + ")");
        table[{leq_name(y, z), leq_name(x, y)}] = leq_name(x, z);
      }
  return FinCat::make(label, elements, std::move(mors), std::move(ids), std::move(table));
}

Monad closure_monad(const std::string& name, CatPtr base, const std::map<Id, Id>& cl) {
  if (!base->thin()) throw InputError("closure monad " + name + ": base must be thin");
  Monad m;
  m.base = base;
  m.name = name;
  m.endo.src = m.endo.dst = base;
  m.endo.label = name;
  for (const Id& x : base->objects) {
    auto it = cl.find(x);
    if (it == cl.end()) throw InputError("closure monad " + name + ": no image for " + x);
    m.endo.obj_map[x] = it->second;
  }
  for (const Mor& f : base->morphisms) {
    const auto& h = base->hom(m.endo.obj_map.at(f.src), m.endo.obj_map.at(f.dst));
    if (h.size() != 1)
      throw InputError("closure monad " + name + ": map not monotone at " + f.name);
    m.endo.mor_map[f.name] = h.front();
  }
  m.mult = nat_between(compose_fun(m.endo, m.endo), m.endo);
  m.unit = nat_between(identity_fun(base), m.endo);
  return m;
}

Fun monotone_fun(const std::string& label, CatPtr src, CatPtr dst,
                 const std::map<Id, Id>& obj_map) {
  Fun f;
  f.src = src;
  f.dst = dst;
  f.label = label;
  f.obj_map = obj_map;
  for (const Mor& m : src->morphisms) {
    const auto& h = dst->hom(obj_map.at(m.src), obj_map.at(m.dst));
    if (h.size() != 1)
      throw InputError("functor " + label + ": no unique image for " + m.name);
    f.mor_map[m.name] = h.front();
  }
  return f;
}

Pseudomonoid strict_pseudomonoid(const std::string& name, CatPtr base, const Fun& mult,
                                 const Id& unit_obj) {
  Pseudomonoid p;
  p.base = base;
  p.mult = mult;
  p.unit = point(base, unit_obj);
  p.name = name;
  Fun idA = identity_fun(base);
  auto identity_cell = [&](const Fun& src, const Fun& dst) {
    std::map<Id, Id> comps;
    for (const Id& x : src.src->objects) {
      if (src.ob(x) != dst.ob(x))
        throw InputError("pseudomonoid " + name + " is not strict at " + x);
      comps[x] = base->id_of(src.ob(x));
    }
    return nat_from_components(src, dst, comps);
  };
  p.assoc = identity_cell(compose_fun(mult, product_fun(mult, idA)),
                          compose_fun(mult, product_fun(idA, mult)));
  p.lunit = identity_cell(compose_fun(mult, product_fun(p.unit, idA)), idA);
  p.runit = identity_cell(compose_fun(mult, product_fun(idA, p.unit)), idA);
  return p;
}

}  // namespace oidal
