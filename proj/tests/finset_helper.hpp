#pragma once

// Test-only model of the category of sets of size at most two: objects are
// explicit element lists, morphisms explicit function tables, composition
// computed from the tables.  Used as an independent oracle against the
// engine's stored-table categories.

#include <map>
#include <string>
#include <vector>

#include "oidal/fincat.hpp"

namespace finset {

struct Fn {
  std::string name, src, dst;
  std::map<int, int> table;
};

struct Model {
  std::map<std::string, std::vector<int>> objects;
  std::vector<Fn> fns;

  const Fn& fn(const std::string& name) const {
    for (const auto& f : fns)
      if (f.name == name) return f;
    throw std::runtime_error("no function " + name);
  }

  std::string compose(const std::string& g, const std::string& f) const {
    const Fn& gf = fn(g);
    const Fn& ff = fn(f);
    std::map<int, int> table;
    for (const auto& [k, v] : ff.table) table[k] = gf.table.at(v);
    for (const auto& h : fns)
      if (h.src == ff.src && h.dst == gf.dst && h.table == table) return h.name;
    throw std::runtime_error("composite not found");
  }
};

inline Model model() {
  Model m;
  m.objects = {{"e0", {}}, {"s1", {1}}, {"s12", {1, 2}}};
  m.fns = {
      {"id_e0", "e0", "e0", {}},
      {"z1", "e0", "s1", {}},
      {"z12", "e0", "s12", {}},
      {"id_s1", "s1", "s1", {{1, 1}}},
      {"in1", "s1", "s12", {{1, 1}}},
      {"in2", "s1", "s12", {{1, 2}}},
      {"q21", "s12", "s1", {{1, 1}, {2, 1}}},
      {"id_s12", "s12", "s12", {{1, 1}, {2, 2}}},
      {"flip12", "s12", "s12", {{1, 2}, {2, 1}}},
      {"k12_1", "s12", "s12", {{1, 1}, {2, 1}}},
      {"k12_2", "s12", "s12", {{1, 2}, {2, 2}}},
  };
  return m;
}

/// The engine category built from the semantic model.
inline oidal::CatPtr category() {
  Model m = model();
  std::vector<oidal::Id> objs;
  for (const auto& [n, _] : m.objects) objs.push_back(n);
  std::vector<oidal::Mor> mors;
  for (const auto& f : m.fns) mors.push_back({f.name, f.src, f.dst});
  std::map<oidal::Id, oidal::Id> ids{{"e0", "id_e0"}, {"s1", "id_s1"}, {"s12", "id_s12"}};
  std::map<std::pair<oidal::Id, oidal::Id>, oidal::Id> table;
  for (const auto& g : m.fns)
    for (const auto& f : m.fns)
      if (g.src == f.dst) table[{g.name, f.name}] = m.compose(g.name, f.name);
  return oidal::FinCat::make("finset2", objs, mors, ids, table);
}

inline oidal::Fun conj_functor(oidal::CatPtr c) {
  // Conjugation by the swap of {1,2}.
  Model m = model();
  const auto& swap = m.fn("flip12").table;
  oidal::Fun f;
  f.src = f.dst = c;
  f.label = "conj";
  for (const auto& [n, _] : m.objects) f.obj_map[n] = n;
  for (const auto& g : m.fns) {
    std::map<int, int> t;
    for (const auto& [k, v] : g.table) {
      int kk = g.src == "s12" ? swap.at(k) : k;
      int vv = g.dst == "s12" ? swap.at(v) : v;
      t[kk] = vv;
    }
    for (const auto& h : m.fns)
      if (h.src == g.src && h.dst == g.dst && h.table == t) f.mor_map[g.name] = h.name;
  }
  return f;
}

}  // namespace finset
