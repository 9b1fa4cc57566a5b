#include "bkit/cat.hpp"

#include "bkit/colimit.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkit {

bool FiniteCategory::is_iso(int m) const {
  for (size_t k = 0; k < morphisms.size(); ++k) {
    int km = static_cast<int>(k);
    if (src(km) != tgt(m) || tgt(km) != src(m)) continue;
    if (compose(km, m) == id_of[static_cast<size_t>(src(m))] &&
        compose(m, km) == id_of[static_cast<size_t>(tgt(m))])
      return true;
  }
  return false;
}

std::vector<int> FiniteCategory::arrows(int a, int b) const {
  std::vector<int> out;
  for (size_t k = 0; k < morphisms.size(); ++k)
    if (morphisms[k].src == a && morphisms[k].tgt == b)
      out.push_back(static_cast<int>(k));
  return out;
}

int FiniteCategory::find_morphism(const std::string& name) const {
  for (size_t k = 0; k < morphisms.size(); ++k)
    if (morphisms[k].name == name) return static_cast<int>(k);
  return -1;
}

void FiniteCategory::validate() const {
  if (static_cast<int>(id_of.size()) != n_objects)
    throw std::runtime_error("category: identity table size");
  for (int a = 0; a < n_objects; ++a) {
    int i = id_of[static_cast<size_t>(a)];
    if (src(i) != a || tgt(i) != a) throw std::runtime_error("category: bad identity");
  }
  for (size_t g = 0; g < morphisms.size(); ++g)
    for (size_t f = 0; f < morphisms.size(); ++f) {
      int c = comp[g][f];
      bool composable = tgt(static_cast<int>(f)) == src(static_cast<int>(g));
      if (!composable) {
        if (c != -1) throw std::runtime_error("category: junk composite");
        continue;
      }
      if (c < 0) throw std::runtime_error("category: missing composite");
      if (src(c) != src(static_cast<int>(f)) || tgt(c) != tgt(static_cast<int>(g)))
        throw std::runtime_error("category: composite endpoints");
    }
  for (size_t f = 0; f < morphisms.size(); ++f) {
    if (compose(id_of[static_cast<size_t>(tgt(static_cast<int>(f)))], static_cast<int>(f)) !=
        static_cast<int>(f))
      throw std::runtime_error("category: left unit");
    if (compose(static_cast<int>(f), id_of[static_cast<size_t>(src(static_cast<int>(f)))]) !=
        static_cast<int>(f))
      throw std::runtime_error("category: right unit");
  }
  for (size_t h = 0; h < morphisms.size(); ++h)
    for (size_t g = 0; g < morphisms.size(); ++g)
      for (size_t f = 0; f < morphisms.size(); ++f) {
        if (tgt(static_cast<int>(f)) != src(static_cast<int>(g)) ||
            tgt(static_cast<int>(g)) != src(static_cast<int>(h)))
          continue;
        if (compose(static_cast<int>(h), compose(static_cast<int>(g), static_cast<int>(f))) !=
            compose(compose(static_cast<int>(h), static_cast<int>(g)), static_cast<int>(f)))
          throw std::runtime_error("category: associativity");
      }
}

void FunctorData::validate() const {
  for (int a = 0; a < src->n_objects; ++a)
    if (tgt->id_of[static_cast<size_t>(on_ob(a))] !=
        on_mor(src->id_of[static_cast<size_t>(a)]))
      throw std::runtime_error("functor: identities");
  for (size_t m = 0; m < src->morphisms.size(); ++m) {
    if (tgt->src(on_mor(static_cast<int>(m))) != on_ob(src->src(static_cast<int>(m))) ||
        tgt->tgt(on_mor(static_cast<int>(m))) != on_ob(src->tgt(static_cast<int>(m))))
      throw std::runtime_error("functor: endpoints");
  }
  for (size_t g = 0; g < src->morphisms.size(); ++g)
    for (size_t f = 0; f < src->morphisms.size(); ++f) {
      if (src->tgt(static_cast<int>(f)) != src->src(static_cast<int>(g))) continue;
      if (on_mor(src->compose(static_cast<int>(g), static_cast<int>(f))) !=
          tgt->compose(on_mor(static_cast<int>(g)), on_mor(static_cast<int>(f))))
        throw std::runtime_error("functor: composition");
    }
}

FunctorData identity_functor(CatPtr c) {
  FunctorData f;
  f.src = f.tgt = c;
  for (int a = 0; a < c->n_objects; ++a) f.ob_map.push_back(a);
  for (size_t m = 0; m < c->morphisms.size(); ++m) f.mor_map.push_back(static_cast<int>(m));
  return f;
}

FunctorData compose(const FunctorData& g, const FunctorData& f) {
  FunctorData h;
  h.src = f.src;
  h.tgt = g.tgt;
  for (int v : f.ob_map) h.ob_map.push_back(g.ob_map[static_cast<size_t>(v)]);
  for (int v : f.mor_map) h.mor_map.push_back(g.mor_map[static_cast<size_t>(v)]);
  return h;
}

CatPtr opposite_category(CatPtr c) {
  auto op = std::make_shared<FiniteCategory>();
  op->n_objects = c->n_objects;
  op->object_names = c->object_names;
  for (const auto& m : c->morphisms) op->morphisms.push_back({m.name, m.tgt, m.src});
  op->id_of = c->id_of;
  op->comp.assign(c->morphisms.size(), std::vector<int>(c->morphisms.size(), -1));
  for (size_t g = 0; g < c->morphisms.size(); ++g)
    for (size_t f = 0; f < c->morphisms.size(); ++f)
      if (c->comp[f][g] >= 0) op->comp[g][f] = c->comp[f][g];
  op->validate();
  return op;
}

FunctorData opposite_functor(const FunctorData& f, CatPtr src_op, CatPtr tgt_op) {
  FunctorData g;
  g.src = src_op;
  g.tgt = tgt_op;
  g.ob_map = f.ob_map;
  g.mor_map = f.mor_map;
  g.validate();
  return g;
}

CatPtr product_category(CatPtr a, CatPtr b) {
  auto p = std::make_shared<FiniteCategory>();
  p->n_objects = a->n_objects * b->n_objects;
  auto ob = [&](int x, int y) { return x * b->n_objects + y; };
  for (int x = 0; x < a->n_objects; ++x)
    for (int y = 0; y < b->n_objects; ++y)
      p->object_names.push_back("(" + a->object_names[static_cast<size_t>(x)] + "," +
                                b->object_names[static_cast<size_t>(y)] + ")");
  auto mor = [&](size_t m, size_t n) {
    return static_cast<int>(m * b->morphisms.size() + n);
  };
  for (size_t m = 0; m < a->morphisms.size(); ++m)
    for (size_t n = 0; n < b->morphisms.size(); ++n)
      p->morphisms.push_back({"(" + a->morphisms[m].name + "," + b->morphisms[n].name + ")",
                              ob(a->morphisms[m].src, b->morphisms[n].src),
                              ob(a->morphisms[m].tgt, b->morphisms[n].tgt)});
  p->id_of.assign(static_cast<size_t>(p->n_objects), -1);
  for (int x = 0; x < a->n_objects; ++x)
    for (int y = 0; y < b->n_objects; ++y)
      p->id_of[static_cast<size_t>(ob(x, y))] =
          mor(static_cast<size_t>(a->id_of[static_cast<size_t>(x)]),
              static_cast<size_t>(b->id_of[static_cast<size_t>(y)]));
  p->comp.assign(p->morphisms.size(), std::vector<int>(p->morphisms.size(), -1));
  for (size_t m2 = 0; m2 < a->morphisms.size(); ++m2)
    for (size_t n2 = 0; n2 < b->morphisms.size(); ++n2)
      for (size_t m1 = 0; m1 < a->morphisms.size(); ++m1)
        for (size_t n1 = 0; n1 < b->morphisms.size(); ++n1) {
          int ca = a->comp[m2][m1];
          int cb = b->comp[n2][n1];
          if (ca < 0 || cb < 0) continue;
          p->comp[static_cast<size_t>(mor(m2, n2))][static_cast<size_t>(mor(m1, n1))] =
              mor(static_cast<size_t>(ca), static_cast<size_t>(cb));
        }
  p->validate();
  return p;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> category_iso_check(
    const FiniteCategory& a, const FiniteCategory& b) {
  if (a.n_objects != b.n_objects || a.morphisms.size() != b.morphisms.size())
    return std::nullopt;
  std::vector<int> ob(static_cast<size_t>(a.n_objects), -1);
  std::vector<char> ob_used(static_cast<size_t>(b.n_objects), 0);
  std::vector<int> mor(a.morphisms.size(), -1);
  std::vector<char> mor_used(b.morphisms.size(), 0);

  auto signature = [](const FiniteCategory& c, int x) {
    int outd = 0, ind = 0, endo = 0;
    for (const auto& m : c.morphisms) {
      if (m.src == x) ++outd;
      if (m.tgt == x) ++ind;
      if (m.src == x && m.tgt == x) ++endo;
    }
    return std::tuple<int, int, int>(outd, ind, endo);
  };

  std::function<bool(size_t)> match_mor = [&](size_t m) -> bool {
    if (m == a.morphisms.size()) {
      for (size_t g = 0; g < a.morphisms.size(); ++g)
        for (size_t f = 0; f < a.morphisms.size(); ++f) {
          int c = a.comp[g][f];
          if (c < 0) continue;
          if (b.comp[static_cast<size_t>(mor[g])][static_cast<size_t>(mor[f])] != mor[static_cast<size_t>(c)])
            return false;
        }
      return true;
    }
    const auto& am = a.morphisms[m];
    for (size_t n = 0; n < b.morphisms.size(); ++n) {
      if (mor_used[n]) continue;
      const auto& bm = b.morphisms[n];
      if (bm.src != ob[static_cast<size_t>(am.src)] ||
          bm.tgt != ob[static_cast<size_t>(am.tgt)])
        continue;
      bool am_id = a.id_of[static_cast<size_t>(am.src)] == static_cast<int>(m);
      bool bm_id = b.id_of[static_cast<size_t>(bm.src)] == static_cast<int>(n);
      if (am_id != bm_id) continue;
      mor[m] = static_cast<int>(n);
      mor_used[n] = 1;
      if (match_mor(m + 1)) return true;
      mor[m] = -1;
      mor_used[n] = 0;
    }
    return false;
  };

  std::function<bool(int)> match_ob = [&](int x) -> bool {
    if (x == a.n_objects) return match_mor(0);
    for (int y = 0; y < b.n_objects; ++y) {
      if (ob_used[static_cast<size_t>(y)]) continue;
      if (signature(a, x) != signature(b, y)) continue;
      ob[static_cast<size_t>(x)] = y;
      ob_used[static_cast<size_t>(y)] = 1;
      if (match_ob(x + 1)) return true;
      ob[static_cast<size_t>(x)] = -1;
      ob_used[static_cast<size_t>(y)] = 0;
    }
    return false;
  };

  if (!match_ob(0)) return std::nullopt;
  return std::make_pair(ob, mor);
}

// ---- nerve -------------------------------------------------------------------

VSimplex NerveVirtual::chain(const std::vector<int>& morphisms, int object_if_vertex) {
  VSimplex v;
  v.dim = static_cast<int>(morphisms.size());
  if (morphisms.empty()) {
    v.key = {-1, object_if_vertex};
  } else {
    for (int m : morphisms) v.key.push_back(m);
  }
  return v;
}

std::pair<std::vector<int>, int> NerveVirtual::decode(const VSimplex& s) {
  if (s.dim == 0) return {{}, static_cast<int>(s.key.at(1))};
  std::vector<int> ms;
  for (int64_t k : s.key) ms.push_back(static_cast<int>(k));
  return {ms, -1};
}

std::vector<VSimplex> NerveVirtual::simplices(int d) const {
  std::vector<VSimplex> out;
  if (d == 0) {
    for (int a = 0; a < c_->n_objects; ++a) out.push_back(chain({}, a));
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int at) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(chain(cur, -1));
      return;
    }
    for (size_t m = 0; m < c_->morphisms.size(); ++m)
      if (c_->morphisms[m].src == at) {
        cur.push_back(static_cast<int>(m));
        self(self, c_->morphisms[m].tgt);
        cur.pop_back();
      }
  };
  for (int a = 0; a < c_->n_objects; ++a) rec(rec, a);
  return out;
}

VSimplex NerveVirtual::face(const VSimplex& s, int i) const {
  auto [ms, ob] = decode(s);
  int d = s.dim;
  if (d == 1) {
    int m = ms[0];
    return chain({}, i == 0 ? c_->tgt(m) : c_->src(m));
  }
  std::vector<int> out;
  if (i == 0) {
    out.assign(ms.begin() + 1, ms.end());
  } else if (i == d) {
    out.assign(ms.begin(), ms.end() - 1);
  } else {
    out.assign(ms.begin(), ms.end());
    int glued = c_->compose(out[static_cast<size_t>(i)], out[static_cast<size_t>(i) - 1]);
    out[static_cast<size_t>(i) - 1] = glued;
    out.erase(out.begin() + i);
  }
  return chain(out, -1);
}

VSimplex NerveVirtual::degeneracy(const VSimplex& s, int i) const {
  auto [ms, ob] = decode(s);
  int object_at_i;
  if (s.dim == 0) {
    object_at_i = ob;
  } else if (i == 0) {
    object_at_i = c_->src(ms[0]);
  } else {
    object_at_i = c_->tgt(ms[static_cast<size_t>(i) - 1]);
  }
  std::vector<int> out = ms;
  out.insert(out.begin() + i, c_->id_of[static_cast<size_t>(object_at_i)]);
  return chain(out, -1);
}

std::vector<VSimplex> NerveVirtual::cofill(int d, const std::vector<VSimplex>& faces) const {
  std::vector<VSimplex> out;
  if (d == 1) {
    int a = static_cast<int>(faces[1].key.at(1));
    int b = static_cast<int>(faces[0].key.at(1));
    for (int m : c_->arrows(a, b)) {
      out.push_back(chain({m}, -1));
    }
    return out;
  }
  // chains are determined by their outer faces
  auto [last_faces, ob0] = decode(faces[static_cast<size_t>(d)]);
  auto [first_faces, ob1] = decode(faces[0]);
  std::vector<int> ms = last_faces;  // f_1 .. f_{d-1}
  ms.push_back(first_faces.back()); // f_d
  VSimplex cand = chain(ms, -1);
  for (int i = 0; i <= d; ++i)
    if (face(cand, i) != faces[static_cast<size_t>(i)]) return {};
  out.push_back(cand);
  return out;
}

int NerveVirtual::dim_hint() const {
  // finite-dimensional iff the nonidentity composability digraph is acyclic
  int n = c_->n_objects;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (size_t m = 0; m < c_->morphisms.size(); ++m)
    if (!c_->is_identity(static_cast<int>(m)))
      adj[static_cast<size_t>(c_->morphisms[m].src)].push_back(c_->morphisms[m].tgt);
  std::vector<int> state(static_cast<size_t>(n), 0), depth(static_cast<size_t>(n), -1);
  bool cyclic = false;
  std::function<int(int)> longest = [&](int a) -> int {
    if (state[static_cast<size_t>(a)] == 1) {
      cyclic = true;
      return 0;
    }
    if (state[static_cast<size_t>(a)] == 2) return depth[static_cast<size_t>(a)];
    state[static_cast<size_t>(a)] = 1;
    int best = 0;
    for (int b : adj[static_cast<size_t>(a)]) best = std::max(best, 1 + longest(b));
    state[static_cast<size_t>(a)] = 2;
    depth[static_cast<size_t>(a)] = best;
    return best;
  };
  int best = 0;
  for (int a = 0; a < n; ++a) best = std::max(best, longest(a));
  return cyclic ? -1 : best;
}

LiftTarget nerve_target(CatPtr c, int enumerate_bound) {
  LiftTarget t;
  t.v = std::make_shared<NerveVirtual>(std::move(c));
  t.enumerate_bound = enumerate_bound;
  return t;
}

// ---- twisted arrow category ----------------------------------------------------

TwistedArrowResult twisted_arrow_cat(CatPtr c) {
  TwistedArrowResult out;
  auto tw = std::make_shared<FiniteCategory>();
  tw->n_objects = static_cast<int>(c->morphisms.size());
  for (const auto& m : c->morphisms) tw->object_names.push_back("[" + m.name + "]");
  // arrow f -> g for each (u, v) with g = v f u
  for (size_t f = 0; f < c->morphisms.size(); ++f)
    for (size_t u = 0; u < c->morphisms.size(); ++u) {
      if (c->tgt(static_cast<int>(u)) != c->src(static_cast<int>(f))) continue;
      for (size_t v = 0; v < c->morphisms.size(); ++v) {
        if (c->src(static_cast<int>(v)) != c->tgt(static_cast<int>(f))) continue;
        int g = c->compose(static_cast<int>(v),
                           c->compose(static_cast<int>(f), static_cast<int>(u)));
        tw->morphisms.push_back(
            {"(" + c->morphisms[u].name + ";" + c->morphisms[v].name + ")@" +
                 c->morphisms[f].name,
             static_cast<int>(f), g});
        out.factors.push_back({static_cast<int>(u), static_cast<int>(v)});
      }
    }
  tw->id_of.assign(static_cast<size_t>(tw->n_objects), -1);
  for (size_t a = 0; a < tw->morphisms.size(); ++a) {
    const auto& [u, v] = out.factors[a];
    int f = tw->morphisms[a].src;
    if (c->is_identity(u) && c->is_identity(v))
      tw->id_of[static_cast<size_t>(f)] = static_cast<int>(a);
  }
  tw->comp.assign(tw->morphisms.size(), std::vector<int>(tw->morphisms.size(), -1));
  auto find_arrow = [&](int f, int u, int v) {
    for (size_t a = 0; a < tw->morphisms.size(); ++a)
      if (tw->morphisms[a].src == f && out.factors[a] == std::make_pair(u, v))
        return static_cast<int>(a);
    return -1;
  };
  for (size_t a2 = 0; a2 < tw->morphisms.size(); ++a2)
    for (size_t a1 = 0; a1 < tw->morphisms.size(); ++a1) {
      if (tw->morphisms[a1].tgt != tw->morphisms[a2].src) continue;
      const auto& [u1, v1] = out.factors[a1];
      const auto& [u2, v2] = out.factors[a2];
      int u = c->compose(u1, u2);
      int v = c->compose(v2, v1);
      tw->comp[a2][a1] = find_arrow(tw->morphisms[a1].src, u, v);
    }
  tw->validate();
  out.cat = tw;

  out.c_op = opposite_category(c);
  out.c_sq = product_category(out.c_op, c);
  FunctorData proj;
  proj.src = tw;
  proj.tgt = out.c_sq;
  for (size_t f = 0; f < c->morphisms.size(); ++f)
    proj.ob_map.push_back(c->src(static_cast<int>(f)) * c->n_objects +
                          c->tgt(static_cast<int>(f)));
  for (size_t a = 0; a < tw->morphisms.size(); ++a) {
    const auto& [u, v] = out.factors[a];
    proj.mor_map.push_back(static_cast<int>(u * c->morphisms.size() + v));
  }
  proj.validate();
  out.proj = proj;
  return out;
}

bool is_discrete_opfibration(const FunctorData& p) {
  // every arrow of the base with a lifted source has exactly one lift
  for (size_t g = 0; g < p.tgt->morphisms.size(); ++g)
    for (int x = 0; x < p.src->n_objects; ++x) {
      if (p.on_ob(x) != p.tgt->src(static_cast<int>(g))) continue;
      int lifts = 0;
      for (size_t f = 0; f < p.src->morphisms.size(); ++f)
        if (p.src->src(static_cast<int>(f)) == x &&
            p.on_mor(static_cast<int>(f)) == static_cast<int>(g))
          ++lifts;
      if (lifts != 1) return false;
    }
  return true;
}

// ---- homotopy category ----------------------------------------------------------

HomotopyCategoryResult homotopy_category(const LiftTarget& x) {
  HomotopyCategoryResult out;
  auto fibr = check_fibration(arrow_to_point(x, -1), FibrationKind::Inner, 3);
  if (!fibr.pass) {
    out.failure = "missing inner horn filler: " + fibr.witness;
    return out;
  }
  const auto& vertices = x.pool(0);
  const auto& edges = x.pool(1);
  const auto& triangles = x.pool(2);

  std::map<VSimplex, size_t> edge_index;
  for (size_t k = 0; k < edges.size(); ++k) edge_index.emplace(edges[k], k);
  UnionFind uf(edges.size());
  for (const auto& t : triangles) {
    VSimplex d0 = x.v->face(t, 0), d1 = x.v->face(t, 1), d2 = x.v->face(t, 2);
    if (x.v->is_degenerate(d0)) uf.unite(edge_index.at(d1), edge_index.at(d2));
    if (x.v->is_degenerate(d2)) uf.unite(edge_index.at(d1), edge_index.at(d0));
  }
  std::map<VSimplex, size_t> vertex_index;
  for (size_t k = 0; k < vertices.size(); ++k) vertex_index.emplace(vertices[k], k);

  std::map<size_t, int> rep_to_mor;
  auto cat = std::make_shared<FiniteCategory>();
  cat->n_objects = static_cast<int>(vertices.size());
  for (size_t k = 0; k < vertices.size(); ++k)
    cat->object_names.push_back("v" + std::to_string(k));
  for (size_t k = 0; k < edges.size(); ++k) {
    size_t r = uf.find(k);
    if (rep_to_mor.count(r)) continue;
    int a = static_cast<int>(vertex_index.at(x.v->face(edges[k], 1)));
    int b = static_cast<int>(vertex_index.at(x.v->face(edges[k], 0)));
    rep_to_mor.emplace(r, static_cast<int>(cat->morphisms.size()));
    cat->morphisms.push_back({"e" + std::to_string(cat->morphisms.size()), a, b});
  }
  for (size_t k = 0; k < edges.size(); ++k)
    out.edge_class.emplace(edges[k], rep_to_mor.at(uf.find(k)));

  cat->id_of.assign(static_cast<size_t>(cat->n_objects), -1);
  for (size_t k = 0; k < vertices.size(); ++k) {
    VSimplex degen = x.v->degeneracy(vertices[k], 0);
    cat->id_of[k] = out.edge_class.at(degen);
  }
  // composition via inner-horn fillers, checked for well-definedness
  size_t nm = cat->morphisms.size();
  cat->comp.assign(nm, std::vector<int>(nm, -1));
  for (const auto& t : triangles) {
    int f = out.edge_class.at(x.v->face(t, 2));
    int g = out.edge_class.at(x.v->face(t, 0));
    int gf = out.edge_class.at(x.v->face(t, 1));
    int& slot = cat->comp[static_cast<size_t>(g)][static_cast<size_t>(f)];
    if (slot == -1) slot = gf;
    else if (slot != gf) {
      out.failure = "composition not well-defined";
      return out;
    }
  }
  for (size_t g = 0; g < nm; ++g)
    for (size_t f = 0; f < nm; ++f) {
      if (cat->morphisms[f].tgt != cat->morphisms[g].src) continue;
      if (cat->comp[g][f] == -1) {
        out.failure = "no composite found for a composable pair";
        return out;
      }
    }
  cat->validate();
  out.cat = cat;
  out.ok = true;
  return out;
}

// ---- Grothendieck construction -----------------------------------------------------

void CatValuedFunctor::validate() const {
  if (static_cast<int>(fiber.size()) != base->n_objects ||
      on_arrow.size() != base->morphisms.size())
    throw std::runtime_error("cat-valued functor: table sizes");
  for (size_t m = 0; m < base->morphisms.size(); ++m) {
    int s = base->src(static_cast<int>(m)), t = base->tgt(static_cast<int>(m));
    if (contravariant) std::swap(s, t);
    if (on_arrow[m].src != fiber[static_cast<size_t>(s)] ||
        on_arrow[m].tgt != fiber[static_cast<size_t>(t)])
      throw std::runtime_error("cat-valued functor: fiber endpoints");
    on_arrow[m].validate();
  }
  for (int a = 0; a < base->n_objects; ++a) {
    const FunctorData& idf = on_arrow[static_cast<size_t>(base->id_of[static_cast<size_t>(a)])];
    if (!(idf == identity_functor(fiber[static_cast<size_t>(a)])))
      throw std::runtime_error("cat-valued functor: identity arrows");
  }
  for (size_t g = 0; g < base->morphisms.size(); ++g)
    for (size_t f = 0; f < base->morphisms.size(); ++f) {
      int c = base->comp[g][f];
      if (c < 0) continue;
      FunctorData composite = contravariant
                                  ? compose(on_arrow[f], on_arrow[g])
                                  : compose(on_arrow[g], on_arrow[f]);
      if (!(composite == on_arrow[static_cast<size_t>(c)]))
        throw std::runtime_error("cat-valued functor: strict functoriality");
    }
}

GrothendieckResult grothendieck(const CatValuedFunctor& g) {
  g.validate();
  GrothendieckResult out;
  auto tot = std::make_shared<FiniteCategory>();
  const auto& base = *g.base;
  // objects
  std::map<std::pair<int, int>, int> ob_index;
  for (int s = 0; s < base.n_objects; ++s)
    for (int x = 0; x < g.fiber[static_cast<size_t>(s)]->n_objects; ++x) {
      ob_index[{s, x}] = tot->n_objects++;
      tot->object_names.push_back(
          "(" + base.object_names[static_cast<size_t>(s)] + "," +
          g.fiber[static_cast<size_t>(s)]->object_names[static_cast<size_t>(x)] + ")");
      out.object_pair.push_back({s, x});
    }
  // morphisms
  std::map<std::tuple<int, int, int, int>, int> mor_index;  // (f, phi, sx, sy-ish)
  for (size_t f = 0; f < base.morphisms.size(); ++f) {
    int s = base.src(static_cast<int>(f)), t = base.tgt(static_cast<int>(f));
    const FunctorData& gf = g.on_arrow[f];
    if (!g.contravariant) {
      // (s,x) -> (t,y): phi : gf(x) -> y in fiber(t)
      for (int x = 0; x < g.fiber[static_cast<size_t>(s)]->n_objects; ++x)
        for (size_t phi = 0; phi < g.fiber[static_cast<size_t>(t)]->morphisms.size(); ++phi) {
          if (g.fiber[static_cast<size_t>(t)]->src(static_cast<int>(phi)) != gf.on_ob(x))
            continue;
          int y = g.fiber[static_cast<size_t>(t)]->tgt(static_cast<int>(phi));
          mor_index[{static_cast<int>(f), static_cast<int>(phi), x, 0}] =
              static_cast<int>(tot->morphisms.size());
          tot->morphisms.push_back(
              {base.morphisms[f].name + "|" +
                   g.fiber[static_cast<size_t>(t)]->morphisms[phi].name + "@" +
                   std::to_string(x),
               ob_index.at({s, x}), ob_index.at({t, y})});
          out.morphism_pair.push_back({static_cast<int>(f), static_cast<int>(phi)});
        }
    } else {
      // (s,x) -> (t,y): phi : x -> gf(y) in fiber(s)
      for (int y = 0; y < g.fiber[static_cast<size_t>(t)]->n_objects; ++y)
        for (size_t phi = 0; phi < g.fiber[static_cast<size_t>(s)]->morphisms.size(); ++phi) {
          if (g.fiber[static_cast<size_t>(s)]->tgt(static_cast<int>(phi)) != gf.on_ob(y))
            continue;
          int x = g.fiber[static_cast<size_t>(s)]->src(static_cast<int>(phi));
          mor_index[{static_cast<int>(f), static_cast<int>(phi), y, 0}] =
              static_cast<int>(tot->morphisms.size());
          tot->morphisms.push_back(
              {base.morphisms[f].name + "|" +
                   g.fiber[static_cast<size_t>(s)]->morphisms[phi].name + "@" +
                   std::to_string(y),
               ob_index.at({s, x}), ob_index.at({t, y})});
          out.morphism_pair.push_back({static_cast<int>(f), static_cast<int>(phi)});
        }
    }
  }
  // identities
  tot->id_of.assign(static_cast<size_t>(tot->n_objects), -1);
  for (int o = 0; o < tot->n_objects; ++o) {
    auto [s, x] = out.object_pair[static_cast<size_t>(o)];
    int idf = base.id_of[static_cast<size_t>(s)];
    int idphi = g.fiber[static_cast<size_t>(s)]->id_of[static_cast<size_t>(x)];
    tot->id_of[static_cast<size_t>(o)] = mor_index.at({idf, idphi, x, 0});
  }
  // composition
  size_t nm = tot->morphisms.size();
  tot->comp.assign(nm, std::vector<int>(nm, -1));
  for (size_t b2 = 0; b2 < nm; ++b2)
    for (size_t b1 = 0; b1 < nm; ++b1) {
      if (tot->morphisms[b1].tgt != tot->morphisms[b2].src) continue;
      auto [f1, phi1] = out.morphism_pair[b1];
      auto [f2, phi2] = out.morphism_pair[b2];
      int fc = base.comp[static_cast<size_t>(f2)][static_cast<size_t>(f1)];
      if (!g.contravariant) {
        int t2 = base.tgt(f2);
        const FunctorData& gf2 = g.on_arrow[static_cast<size_t>(f2)];
        int phic = g.fiber[static_cast<size_t>(t2)]->compose(phi2, gf2.on_mor(phi1));
        auto [sx, xx] = out.object_pair[static_cast<size_t>(tot->morphisms[b1].src)];
        (void)sx;
        tot->comp[b2][b1] = mor_index.at({fc, phic, xx, 0});
      } else {
        int s1 = base.src(f1);
        const FunctorData& gf1 = g.on_arrow[static_cast<size_t>(f1)];
        int phic = g.fiber[static_cast<size_t>(s1)]->compose(gf1.on_mor(phi2), phi1);
        auto [ty, yy] = out.object_pair[static_cast<size_t>(tot->morphisms[b2].tgt)];
        (void)ty;
        tot->comp[b2][b1] = mor_index.at({fc, phic, yy, 0});
      }
    }
  tot->validate();
  out.total = tot;

  // projection
  FunctorData proj;
  proj.src = tot;
  proj.tgt = g.base;
  for (int o = 0; o < tot->n_objects; ++o)
    proj.ob_map.push_back(out.object_pair[static_cast<size_t>(o)].first);
  for (size_t m = 0; m < nm; ++m) proj.mor_map.push_back(out.morphism_pair[m].first);
  proj.validate();
  out.proj = proj;

  // canonical marked edges and the exhaustive lifting verification
  out.marked.assign(nm, 0);
  for (size_t m = 0; m < nm; ++m) {
    auto [f, phi] = out.morphism_pair[m];
    int fiber_at = g.contravariant ? base.src(f) : base.tgt(f);
    if (g.fiber[static_cast<size_t>(fiber_at)]->is_iso(phi))
      out.marked[m] = 1;
    bool univ = g.contravariant ? is_cartesian_morphism(proj, static_cast<int>(m))
                                : is_cocartesian_morphism(proj, static_cast<int>(m));
    if (univ != (out.marked[m] != 0))
      throw std::runtime_error("grothendieck: marked edges disagree with lifting test");
  }
  return out;
}

bool is_cocartesian_morphism(const FunctorData& p, int f) {
  const FiniteCategory& c = *p.src;
  const FiniteCategory& d = *p.tgt;
  int y = c.tgt(f);
  for (size_t h = 0; h < c.morphisms.size(); ++h) {
    if (c.src(static_cast<int>(h)) != c.src(f)) continue;
    for (size_t k = 0; k < d.morphisms.size(); ++k) {
      if (d.src(static_cast<int>(k)) != d.tgt(p.on_mor(f))) continue;
      if (d.compose(static_cast<int>(k), p.on_mor(f)) != p.on_mor(static_cast<int>(h)))
        continue;
      int solutions = 0;
      for (size_t l = 0; l < c.morphisms.size(); ++l) {
        if (c.src(static_cast<int>(l)) != y) continue;
        if (p.on_mor(static_cast<int>(l)) != static_cast<int>(k)) continue;
        if (c.compose(static_cast<int>(l), f) != static_cast<int>(h)) continue;
        ++solutions;
      }
      if (solutions != 1) return false;
    }
  }
  return true;
}

bool is_cartesian_morphism(const FunctorData& p, int f) {
  const FiniteCategory& c = *p.src;
  const FiniteCategory& d = *p.tgt;
  int x = c.src(f);
  for (size_t h = 0; h < c.morphisms.size(); ++h) {
    if (c.tgt(static_cast<int>(h)) != c.tgt(f)) continue;
    for (size_t k = 0; k < d.morphisms.size(); ++k) {
      if (d.tgt(static_cast<int>(k)) != d.src(p.on_mor(f))) continue;
      if (d.compose(p.on_mor(f), static_cast<int>(k)) != p.on_mor(static_cast<int>(h)))
        continue;
      int solutions = 0;
      for (size_t l = 0; l < c.morphisms.size(); ++l) {
        if (c.tgt(static_cast<int>(l)) != x) continue;
        if (p.on_mor(static_cast<int>(l)) != static_cast<int>(k)) continue;
        if (c.compose(f, static_cast<int>(l)) != static_cast<int>(h)) continue;
        ++solutions;
      }
      if (solutions != 1) return false;
    }
  }
  return true;
}

}  // namespace bkit
