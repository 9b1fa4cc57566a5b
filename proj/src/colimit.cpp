#include "bkit/colimit.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace bkit {

namespace {

// Tags a simplex of the disjoint union: (object index, ref within it).
struct Tagged {
  int obj;
  SimplexRef ref;
  friend bool operator==(const Tagged&, const Tagged&) = default;
  friend auto operator<=>(const Tagged&, const Tagged&) = default;
};

struct ColimitBuilder {
  const std::vector<SSetPtr>& objects;
  const std::vector<DiagramEdge>& edges;
  int top_dim = -1;

  // Per dimension: the tagged simplices, an index map, and a union-find.
  std::vector<std::vector<Tagged>> elems;
  std::vector<std::map<Tagged, size_t>> index;
  std::vector<UnionFind> uf;

  // Per dimension: representative class id -> final class slot.
  std::vector<std::unordered_map<size_t, size_t>> class_slot;
  // class data, filled during normalization
  std::vector<std::vector<SimplexRef>> class_norm;  // slot -> normal form in P
  std::vector<std::vector<char>> class_nondeg;

  SSetPtr out;

  explicit ColimitBuilder(const std::vector<SSetPtr>& objs,
                          const std::vector<DiagramEdge>& eds)
      : objects(objs), edges(eds) {
    for (const auto& o : objects) top_dim = std::max(top_dim, o->dim());
    if (top_dim < 0) top_dim = -1;
    elems.resize(static_cast<size_t>(top_dim) + 1);
    index.resize(static_cast<size_t>(top_dim) + 1);
    for (int d = 0; d <= top_dim; ++d) {
      for (size_t ob = 0; ob < objects.size(); ++ob)
        for (const auto& r : objects[ob]->all_refs(d)) {
          Tagged t{static_cast<int>(ob), r};
          index[static_cast<size_t>(d)].emplace(t, elems[static_cast<size_t>(d)].size());
          elems[static_cast<size_t>(d)].push_back(t);
        }
      uf.emplace_back(elems[static_cast<size_t>(d)].size());
    }
    // Relations are needed at every dimension: degenerate simplices of the
    // gluing object identify degenerate refs the lower levels cannot see.
    for (const auto& e : edges) {
      for (int d = 0; d <= top_dim; ++d)
        for (const auto& r : objects[static_cast<size_t>(e.from)]->all_refs(d)) {
          Tagged a{e.from, r};
          Tagged b{e.to, e.map.apply(r)};
          uf[static_cast<size_t>(d)].unite(at(d, a), at(d, b));
        }
    }
  }

  size_t at(int d, const Tagged& t) const {
    auto it = index[static_cast<size_t>(d)].find(t);
    if (it == index[static_cast<size_t>(d)].end())
      throw std::logic_error("colimit: missing simplex");
    return it->second;
  }

  size_t cls(int d, const Tagged& t) {
    return uf[static_cast<size_t>(d)].find(at(d, t));
  }

  // Face / degeneracy on classes via any representative.
  size_t class_face(int d, size_t c, int i) {
    const Tagged& rep = elems[static_cast<size_t>(d)][c];
    Tagged f{rep.obj, objects[static_cast<size_t>(rep.obj)]->face(rep.ref, i)};
    return cls(d - 1, f);
  }
  size_t class_degeneracy(int d, size_t c, int i) {
    const Tagged& rep = elems[static_cast<size_t>(d)][c];
    Tagged s{rep.obj, objects[static_cast<size_t>(rep.obj)]->degenerate(rep.ref, i)};
    return cls(d + 1, s);
  }

  // A class is degenerate when s_i(d_i(c)) == c for some i.
  bool degenerate_class(int d, size_t c, int* which) {
    for (int i = 0; i < d; ++i) {
      size_t f = class_face(d, c, i);
      if (class_degeneracy(d - 1, f, i) == c) {
        *which = i;
        return true;
      }
    }
    return false;
  }

  SimplexRef normalize_class(int d, size_t c) {
    c = uf[static_cast<size_t>(d)].find(c);
    auto it = class_slot[static_cast<size_t>(d)].find(c);
    if (it == class_slot[static_cast<size_t>(d)].end())
      throw std::logic_error("colimit: class not yet normalized");
    return class_norm[static_cast<size_t>(d)][it->second];
  }

  void build() {
    auto obj = std::make_shared<SimplicialSet>();
    class_slot.resize(static_cast<size_t>(top_dim) + 1);
    class_norm.resize(static_cast<size_t>(top_dim) + 1);
    class_nondeg.resize(static_cast<size_t>(top_dim) + 1);
    for (int d = 0; d <= top_dim; ++d) {
      // First pass: nondegenerate classes become generators.
      for (size_t k = 0; k < elems[static_cast<size_t>(d)].size(); ++k) {
        size_t c = uf[static_cast<size_t>(d)].find(k);
        if (c != k) continue;  // one visit per class
        if (class_slot[static_cast<size_t>(d)].count(c)) continue;
        int which = -1;
        if (degenerate_class(d, c, &which)) continue;  // second pass
        std::vector<SimplexRef> faces;
        for (int i = 0; i <= d && d > 0; ++i)
          faces.push_back(normalize_class(d - 1, class_face(d, c, i)));
        std::string name = "c" + std::to_string(d) + "_" +
                           std::to_string(obj->count(d));
        SimplexId id = obj->add_simplex(d, name, std::move(faces));
        size_t slot = class_norm[static_cast<size_t>(d)].size();
        class_slot[static_cast<size_t>(d)].emplace(c, slot);
        class_norm[static_cast<size_t>(d)].push_back(nondeg_ref(id.dim, id.idx));
        class_nondeg[static_cast<size_t>(d)].push_back(1);
      }
      // Second pass: degenerate classes get their EZ normal form.
      bool progress = true;
      while (progress) {
        progress = false;
        for (size_t k = 0; k < elems[static_cast<size_t>(d)].size(); ++k) {
          size_t c = uf[static_cast<size_t>(d)].find(k);
          if (class_slot[static_cast<size_t>(d)].count(c)) continue;
          int which = -1;
          if (!degenerate_class(d, c, &which))
            throw std::logic_error("colimit: unclassified class");
          size_t f = class_face(d, c, which);
          if (!class_slot[static_cast<size_t>(d - 1)].count(
                  uf[static_cast<size_t>(d - 1)].find(f)))
            throw std::logic_error("colimit: face class missing");
          SimplexRef inner = normalize_class(d - 1, f);
          SimplexRef norm{word_insert(inner.word, which), inner.target};
          size_t slot = class_norm[static_cast<size_t>(d)].size();
          class_slot[static_cast<size_t>(d)].emplace(c, slot);
          class_norm[static_cast<size_t>(d)].push_back(norm);
          class_nondeg[static_cast<size_t>(d)].push_back(0);
          progress = true;
        }
      }
    }
    out = obj;
  }

  ColimitResult result() {
    ColimitResult res;
    res.obj = out;
    for (size_t ob = 0; ob < objects.size(); ++ob) {
      SimplicialMap leg;
      leg.src = objects[ob];
      leg.tgt = out;
      leg.assign.resize(static_cast<size_t>(objects[ob]->dim_bound()) + 1);
      for (int d = 0; d <= objects[ob]->dim_bound(); ++d)
        for (int k = 0; k < objects[ob]->count(d); ++k) {
          Tagged t{static_cast<int>(ob), nondeg_ref(d, k)};
          leg.assign[static_cast<size_t>(d)].push_back(normalize_class(d, cls(d, t)));
        }
      res.cocone.push_back(std::move(leg));
    }
    return res;
  }
};

}  // namespace

ColimitResult colimit(const std::vector<SSetPtr>& objects,
                      const std::vector<DiagramEdge>& edges) {
  ColimitBuilder b(objects, edges);
  b.build();
  return b.result();
}

SSetPtr disjoint_union(const std::vector<SSetPtr>& objects) {
  return colimit(objects, {}).obj;
}

PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (!same_sset(*f.src, *g.src)) throw std::invalid_argument("pushout: sources differ");
  std::vector<SSetPtr> objs = {f.src, f.tgt, g.tgt};
  DiagramEdge ef{0, 1, f};
  DiagramEdge eg{0, 2, g};
  auto res = colimit(objs, {ef, eg});
  return {res.obj, res.cocone[1], res.cocone[2]};
}

SimplicialMap pushout_factor(const PushoutResult& p, const SimplicialMap& f,
                             const SimplicialMap& g, const SimplicialMap& u,
                             const SimplicialMap& v) {
  // w(P-cell): choose a preimage under a cocone leg and push it through the
  // corresponding cocone map; consistency is validated afterwards.
  SimplicialMap w;
  w.src = p.obj;
  w.tgt = u.tgt;
  w.assign.resize(static_cast<size_t>(p.obj->dim_bound()) + 1);
  for (int d = 0; d <= p.obj->dim_bound(); ++d)
    w.assign[static_cast<size_t>(d)].resize(static_cast<size_t>(p.obj->count(d)),
                                            SimplexRef{{}, {-1, -1}});
  auto install = [&](const SimplicialMap& leg, const SimplicialMap& cone) {
    for (int d = 0; d <= leg.src->dim_bound(); ++d)
      for (int k = 0; k < leg.src->count(d); ++k) {
        SimplexRef img = leg.assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
        if (!img.nondegenerate()) continue;
        w.assign[static_cast<size_t>(img.target.dim)][static_cast<size_t>(img.target.idx)] =
            cone.assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
      }
  };
  install(p.from_x, u);
  install(p.from_y, v);
  for (int d = 0; d <= p.obj->dim_bound(); ++d)
    for (int k = 0; k < p.obj->count(d); ++k)
      if (w.assign[static_cast<size_t>(d)][static_cast<size_t>(k)].target.dim < 0)
        throw std::runtime_error("pushout_factor: unreached cell");
  w.validate();
  if (!(compose(w, p.from_x) == u) || !(compose(w, p.from_y) == v))
    throw std::runtime_error("pushout_factor: cocone mismatch");
  return w;
}

bool is_pushout_square(const SimplicialMap& f, const SimplicialMap& g,
                       const SimplicialMap& u, const SimplicialMap& v) {
  if (!same_sset(*f.src, *g.src) || !same_sset(*u.src, *f.tgt) ||
      !same_sset(*v.src, *g.tgt) || !same_sset(*u.tgt, *v.tgt))
    return false;
  if (!(compose(u, f) == compose(v, g))) return false;
  PushoutResult p = pushout(f, g);
  try {
    SimplicialMap w = pushout_factor(p, f, g, u, v);
    return w.is_iso();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace bkit
