#include "bkit/burnside.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkit {

void AdequateTriple::validate_closure() const {
  const FiniteCategory& cc = *c;
  for (size_t m = 0; m < cc.morphisms.size(); ++m) {
    bool iso = cc.is_iso(static_cast<int>(m));
    if (iso && (!ing(static_cast<int>(m)) || !egr(static_cast<int>(m))))
      throw std::runtime_error("triple: isomorphism outside a subcategory");
  }
  for (size_t g = 0; g < cc.morphisms.size(); ++g)
    for (size_t f = 0; f < cc.morphisms.size(); ++f) {
      int comp = cc.comp[g][f];
      if (comp < 0) continue;
      if (ing(static_cast<int>(g)) && ing(static_cast<int>(f)) && !ing(comp))
        throw std::runtime_error("triple: ingressives not closed under composition");
      if (egr(static_cast<int>(g)) && egr(static_cast<int>(f)) && !egr(comp))
        throw std::runtime_error("triple: egressives not closed under composition");
    }
}

AdequateTriple full_triple(CatPtr c) {
  AdequateTriple t;
  t.c = std::move(c);
  t.ingressive.assign(t.c->morphisms.size(), 1);
  t.egressive.assign(t.c->morphisms.size(), 1);
  return t;
}

bool commutes(const FiniteCategory& c, int top, int left, int right, int bottom) {
  if (c.src(top) != c.src(left)) return false;
  if (c.src(right) != c.tgt(top) || c.src(bottom) != c.tgt(left)) return false;
  if (c.tgt(right) != c.tgt(bottom)) return false;
  return c.compose(right, top) == c.compose(bottom, left);
}

bool is_pullback(const FiniteCategory& c, int top, int left, int right, int bottom) {
  if (!commutes(c, top, left, right, bottom)) return false;
  int corner = c.src(top);
  for (int w = 0; w < c.n_objects; ++w) {
    for (size_t u = 0; u < c.morphisms.size(); ++u) {
      if (c.src(static_cast<int>(u)) != w || c.tgt(static_cast<int>(u)) != c.tgt(top))
        continue;
      for (size_t v = 0; v < c.morphisms.size(); ++v) {
        if (c.src(static_cast<int>(v)) != w || c.tgt(static_cast<int>(v)) != c.tgt(left))
          continue;
        if (c.compose(right, static_cast<int>(u)) != c.compose(bottom, static_cast<int>(v)))
          continue;
        int mediators = 0;
        for (size_t h = 0; h < c.morphisms.size(); ++h) {
          if (c.src(static_cast<int>(h)) != w || c.tgt(static_cast<int>(h)) != corner)
            continue;
          if (c.compose(top, static_cast<int>(h)) == static_cast<int>(u) &&
              c.compose(left, static_cast<int>(h)) == static_cast<int>(v))
            ++mediators;
        }
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

bool PullbackCache::ambigressive_pullback(int top, int left, int right, int bottom) const {
  auto key = std::make_tuple(top, left, right, bottom);
  auto it = verdict_.find(key);
  if (it != verdict_.end()) return it->second;
  bool ok = t_->ing(top) && t_->ing(bottom) && t_->egr(left) && t_->egr(right) &&
            is_pullback(*t_->c, top, left, right, bottom);
  verdict_.emplace(key, ok);
  return ok;
}

const std::vector<AmbigressiveCompletion>& PullbackCache::completions(
    int bottom_ing, int right_egr) const {
  auto key = std::make_pair(bottom_ing, right_egr);
  auto it = compl_.find(key);
  if (it != compl_.end()) return it->second;
  std::vector<AmbigressiveCompletion> out;
  const FiniteCategory& c = *t_->c;
  if (t_->c->tgt(bottom_ing) == t_->c->tgt(right_egr)) {
    for (size_t top = 0; top < c.morphisms.size(); ++top) {
      if (!t_->ing(static_cast<int>(top))) continue;
      if (c.tgt(static_cast<int>(top)) != c.src(right_egr)) continue;
      for (size_t left = 0; left < c.morphisms.size(); ++left) {
        if (!t_->egr(static_cast<int>(left))) continue;
        if (c.src(static_cast<int>(left)) != c.src(static_cast<int>(top))) continue;
        if (c.tgt(static_cast<int>(left)) != c.src(bottom_ing)) continue;
        if (ambigressive_pullback(static_cast<int>(top), static_cast<int>(left),
                                  right_egr, bottom_ing))
          out.push_back({c.src(static_cast<int>(top)), static_cast<int>(top),
                         static_cast<int>(left)});
      }
    }
  }
  return compl_.emplace(key, std::move(out)).first->second;
}

AdequacyReport check_adequate(const AdequateTriple& t) {
  AdequacyReport rep;
  t.validate_closure();
  PullbackCache cache(t);
  const FiniteCategory& c = *t.c;
  for (size_t f = 0; f < c.morphisms.size(); ++f) {
    if (!t.ing(static_cast<int>(f))) continue;
    for (size_t g = 0; g < c.morphisms.size(); ++g) {
      if (!t.egr(static_cast<int>(g))) continue;
      if (c.tgt(static_cast<int>(f)) != c.tgt(static_cast<int>(g))) continue;
      const auto& comps = cache.completions(static_cast<int>(f), static_cast<int>(g));
      if (comps.empty()) {
        rep.failure = "no ambigressive pullback over (" + c.morphisms[f].name + ", " +
                      c.morphisms[g].name + ")";
        return rep;
      }
      rep.witnesses.push_back({static_cast<int>(f), static_cast<int>(g), comps.front()});
    }
  }
  rep.ok = true;
  return rep;
}

// ---- grid shapes ---------------------------------------------------------------

const GridShape& grid_shape(int n) {
  static std::map<int, GridShape> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GridShape s;
  s.n = n;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      s.pair_index[{i, j}] = static_cast<int>(s.pairs.size());
      s.pairs.push_back({i, j});
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = i; k <= j; ++k)
        for (int l = k; l <= j; ++l) {
          s.quad_index[{i, j, k, l}] = static_cast<int>(s.quads.size());
          s.quads.push_back({i, j, k, l});
        }
  return cache.emplace(n, std::move(s)).first->second;
}

// ---- AeffVirtual ------------------------------------------------------------------

AeffVirtual::AeffVirtual(AdequateTriple t) : t_(std::move(t)), cache_(t_) {
  t_.validate_closure();
}

VSimplex AeffVirtual::encode(const BurnsideSimplex& g) {
  VSimplex v;
  v.dim = g.n;
  for (int x : g.obj) v.key.push_back(x);
  v.key.push_back(-7);
  for (int m : g.arr) v.key.push_back(m);
  return v;
}

BurnsideSimplex AeffVirtual::decode(const VSimplex& s) {
  BurnsideSimplex g;
  g.n = s.dim;
  size_t pos = 0;
  while (pos < s.key.size() && s.key[pos] != -7)
    g.obj.push_back(static_cast<int>(s.key[pos++]));
  ++pos;
  while (pos < s.key.size()) g.arr.push_back(static_cast<int>(s.key[pos++]));
  return g;
}

bool AeffVirtual::valid_simplex(const BurnsideSimplex& g) const {
  const GridShape& sh = grid_shape(g.n);
  const FiniteCategory& c = *t_.c;
  if (g.obj.size() != sh.pairs.size() || g.arr.size() != sh.quads.size()) return false;
  for (size_t q = 0; q < sh.quads.size(); ++q) {
    auto [i, j, k, l] = sh.quads[q];
    int m = g.arr[q];
    if (m < 0) return false;
    if (c.src(m) != g.obj[static_cast<size_t>(sh.pair_index.at({i, j}))]) return false;
    if (c.tgt(m) != g.obj[static_cast<size_t>(sh.pair_index.at({k, l}))]) return false;
    if (i == k && j == l && !c.is_identity(m)) return false;
    // horizontal parts ingressive, vertical parts egressive
    if (l == j && !t_.ing(m)) return false;
    if (k == i && !t_.egr(m)) return false;
  }
  // functoriality: one-step factorizations agree
  for (size_t q = 0; q < sh.quads.size(); ++q) {
    auto [i, j, k, l] = sh.quads[q];
    for (int k2 = k; k2 <= l; ++k2)
      for (int l2 = k2; l2 <= l; ++l2) {
        int first = g.arr[static_cast<size_t>(sh.quad_index.at({i, j, k, l}))];
        int second = g.arr[static_cast<size_t>(sh.quad_index.at({k, l, k2, l2}))];
        int direct = g.arr[static_cast<size_t>(sh.quad_index.at({i, j, k2, l2}))];
        if (c.compose(second, first) != direct) return false;
      }
  }
  // every interval square is an ambigressive pullback
  for (int i = 0; i <= g.n; ++i)
    for (int k = i; k <= g.n; ++k)
      for (int l = k; l <= g.n; ++l)
        for (int j = l; j <= g.n; ++j) {
          int top = g.arr[static_cast<size_t>(sh.quad_index.at({i, j, k, j}))];
          int left = g.arr[static_cast<size_t>(sh.quad_index.at({i, j, i, l}))];
          int right = g.arr[static_cast<size_t>(sh.quad_index.at({k, j, k, l}))];
          int bottom = g.arr[static_cast<size_t>(sh.quad_index.at({i, l, k, l}))];
          if (!cache_.ambigressive_pullback(top, left, right, bottom)) return false;
        }
  return true;
}

namespace {

// Completes unit arrows into a full arrow table by composing steps.
// h_step[(i,j)]: (i,j) -> (i+1,j); v_step[(i,j)]: (i,j) -> (i,j-1).
bool fill_arrows(const FiniteCategory& c, const GridShape& sh,
                 const std::vector<int>& obj,
                 const std::map<std::pair<int, int>, int>& h_step,
                 const std::map<std::pair<int, int>, int>& v_step,
                 std::vector<int>* arr) {
  arr->assign(sh.quads.size(), -1);
  for (size_t q = 0; q < sh.quads.size(); ++q) {
    auto [i, j, k, l] = sh.quads[q];
    int cur = c.id_of[static_cast<size_t>(obj[static_cast<size_t>(sh.pair_index.at({i, j}))])];
    int at_i = i, at_j = j;
    while (at_i < k) {
      cur = c.compose(h_step.at({at_i, at_j}), cur);
      if (cur < 0) return false;
      ++at_i;
    }
    while (at_j > l) {
      cur = c.compose(v_step.at({at_i, at_j}), cur);
      if (cur < 0) return false;
      --at_j;
    }
    (*arr)[q] = cur;
  }
  return true;
}

}  // namespace

std::vector<VSimplex> AeffVirtual::simplices(int d) const {
  const GridShape& sh = grid_shape(d);
  const FiniteCategory& c = *t_.c;
  std::vector<VSimplex> out;
  std::vector<int> obj(sh.pairs.size(), -1);
  std::map<std::pair<int, int>, int> h_step, v_step;

  // positions by width; width-0 vertices, width-1 spans, then completions
  std::function<void(int, int)> place = [&](int width, int i) {
    if (width > d) {
      BurnsideSimplex g;
      g.n = d;
      g.obj = obj;
      if (!fill_arrows(c, sh, obj, h_step, v_step, &g.arr)) return;
      if (!valid_simplex(g)) return;
      out.push_back(encode(g));
      return;
    }
    if (i + width > d) {
      place(width + 1, 0);
      return;
    }
    int j = i + width;
    size_t pslot = static_cast<size_t>(sh.pair_index.at({i, j}));
    if (width == 0) {
      for (int x = 0; x < c.n_objects; ++x) {
        obj[pslot] = x;
        place(width, i + 1);
      }
      obj[pslot] = -1;
      return;
    }
    if (width == 1) {
      int x = obj[static_cast<size_t>(sh.pair_index.at({i, i}))];
      int y = obj[static_cast<size_t>(sh.pair_index.at({j, j}))];
      for (size_t top = 0; top < c.morphisms.size(); ++top) {
        if (!t_.ing(static_cast<int>(top)) || c.tgt(static_cast<int>(top)) != y) continue;
        for (size_t left = 0; left < c.morphisms.size(); ++left) {
          if (!t_.egr(static_cast<int>(left)) || c.tgt(static_cast<int>(left)) != x)
            continue;
          if (c.src(static_cast<int>(left)) != c.src(static_cast<int>(top))) continue;
          obj[pslot] = c.src(static_cast<int>(top));
          h_step[{i, j}] = static_cast<int>(top);
          v_step[{i, j}] = static_cast<int>(left);
          place(width, i + 1);
        }
      }
      obj[pslot] = -1;
      h_step.erase({i, j});
      v_step.erase({i, j});
      return;
    }
    // width >= 2: ambigressive completions of the unit square cospan
    int bottom = h_step.at({i, j - 1});
    int right = v_step.at({i + 1, j});
    for (const auto& comp : cache_.completions(bottom, right)) {
      obj[pslot] = comp.apex;
      h_step[{i, j}] = comp.top;
      v_step[{i, j}] = comp.left;
      place(width, i + 1);
    }
    obj[pslot] = -1;
    h_step.erase({i, j});
    v_step.erase({i, j});
  };
  place(0, 0);
  return out;
}

VSimplex AeffVirtual::reindex(const VSimplex& s, const DeltaMorphism& f) const {
  BurnsideSimplex g = decode(s);
  const GridShape& from = grid_shape(g.n);
  const GridShape& to = grid_shape(f.source);
  BurnsideSimplex h;
  h.n = f.source;
  h.obj.resize(to.pairs.size());
  h.arr.resize(to.quads.size());
  for (size_t p = 0; p < to.pairs.size(); ++p) {
    auto [i, j] = to.pairs[p];
    h.obj[p] = g.obj[static_cast<size_t>(from.pair_index.at({f(i), f(j)}))];
  }
  for (size_t q = 0; q < to.quads.size(); ++q) {
    auto [i, j, k, l] = to.quads[q];
    h.arr[q] = g.arr[static_cast<size_t>(from.quad_index.at({f(i), f(j), f(k), f(l)}))];
  }
  return encode(h);
}

VSimplex AeffVirtual::face(const VSimplex& s, int i) const {
  return reindex(s, DeltaMorphism::coface(s.dim, i));
}

VSimplex AeffVirtual::degeneracy(const VSimplex& s, int i) const {
  return reindex(s, DeltaMorphism::codegeneracy(s.dim, i));
}

std::vector<VSimplex> AeffVirtual::cofill(int d, const std::vector<VSimplex>& faces) const {
  const FiniteCategory& c = *t_.c;
  const GridShape& sh = grid_shape(d);
  std::vector<VSimplex> out;
  if (d == 1) {
    BurnsideSimplex v1 = decode(faces[1]), v0 = decode(faces[0]);
    int x = v1.obj[0], y = v0.obj[0];
    for (size_t top = 0; top < c.morphisms.size(); ++top) {
      if (!t_.ing(static_cast<int>(top)) || c.tgt(static_cast<int>(top)) != y) continue;
      for (size_t left = 0; left < c.morphisms.size(); ++left) {
        if (!t_.egr(static_cast<int>(left)) || c.tgt(static_cast<int>(left)) != x) continue;
        if (c.src(static_cast<int>(left)) != c.src(static_cast<int>(top))) continue;
        BurnsideSimplex g;
        g.n = 1;
        g.obj = {x, c.src(static_cast<int>(top)), y};
        // pairs ordered (0,0), (0,1), (1,1)
        g.obj[static_cast<size_t>(sh.pair_index.at({0, 0}))] = x;
        g.obj[static_cast<size_t>(sh.pair_index.at({0, 1}))] = c.src(static_cast<int>(top));
        g.obj[static_cast<size_t>(sh.pair_index.at({1, 1}))] = y;
        std::map<std::pair<int, int>, int> h_step{{{0, 1}, static_cast<int>(top)}};
        std::map<std::pair<int, int>, int> v_step{{{0, 1}, static_cast<int>(left)}};
        if (!fill_arrows(c, sh, g.obj, h_step, v_step, &g.arr)) continue;
        bool match = true;
        VSimplex cand = encode(g);
        for (int m = 0; m <= 1 && match; ++m)
          if (face(cand, m) != faces[static_cast<size_t>(m)]) match = false;
        if (match && valid_simplex(g)) out.push_back(cand);
      }
    }
    return out;
  }
  // d >= 2: all objects and most unit arrows are readable from the faces
  std::vector<BurnsideSimplex> fg;
  for (const auto& f : faces) fg.push_back(decode(f));
  std::vector<int> obj(sh.pairs.size(), -1);
  auto read_pair = [&](int i, int j) {
    for (int m = 0; m <= d; ++m) {
      if (m == i || m == j) continue;
      int i2 = i - (i > m ? 1 : 0), j2 = j - (j > m ? 1 : 0);
      return fg[static_cast<size_t>(m)]
          .obj[static_cast<size_t>(grid_shape(d - 1).pair_index.at({i2, j2}))];
    }
    return -1;
  };
  for (size_t p = 0; p < sh.pairs.size(); ++p)
    obj[p] = read_pair(sh.pairs[p].first, sh.pairs[p].second);
  auto read_quad = [&](int i, int j, int k, int l) {
    for (int m = 0; m <= d; ++m) {
      if (m == i || m == j || m == k || m == l) continue;
      auto fix = [&](int v) { return v - (v > m ? 1 : 0); };
      return fg[static_cast<size_t>(m)]
          .arr[static_cast<size_t>(grid_shape(d - 1).quad_index.at(
              {fix(i), fix(j), fix(k), fix(l)}))];
    }
    return -1;
  };
  std::map<std::pair<int, int>, int> h_step, v_step;
  bool missing_top_units = false;
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      int h = read_quad(i, j, i + 1, j);
      int v = read_quad(i, j, i, j - 1);
      if (h >= 0) h_step[{i, j}] = h;
      else missing_top_units = true;
      if (v >= 0) v_step[{i, j}] = v;
      else missing_top_units = true;
    }
  auto finish = [&](std::map<std::pair<int, int>, int> hs,
                    std::map<std::pair<int, int>, int> vs) {
    BurnsideSimplex g;
    g.n = d;
    g.obj = obj;
    if (!fill_arrows(c, sh, obj, hs, vs, &g.arr)) return;
    if (!valid_simplex(g)) return;
    VSimplex cand = encode(g);
    for (int m = 0; m <= d; ++m)
      if (face(cand, m) != faces[static_cast<size_t>(m)]) return;
    out.push_back(cand);
  };
  if (!missing_top_units) {
    finish(h_step, v_step);
    return out;
  }
  // d == 2: the two unit arrows out of (0,2) come from completions
  int bottom = h_step.at({0, 1});
  int right = v_step.at({1, 2});
  for (const auto& comp : cache_.completions(bottom, right)) {
    if (comp.apex != obj[static_cast<size_t>(sh.pair_index.at({0, 2}))]) continue;
    auto hs = h_step;
    auto vs = v_step;
    hs[{0, 2}] = comp.top;
    vs[{0, 2}] = comp.left;
    finish(hs, vs);
  }
  return out;
}

LiftTarget aeff_target(const AdequateTriple& t, int enumerate_bound) {
  LiftTarget lt;
  lt.v = std::make_shared<AeffVirtual>(t);
  lt.enumerate_bound = enumerate_bound;
  return lt;
}

FibrationReport check_pr22(const AdequateTriple& t, int bound) {
  auto adequacy = check_adequate(t);
  if (!adequacy.ok) throw std::runtime_error("check_pr22: triple not adequate");
  auto arrow = arrow_to_point(aeff_target(t, bound - 1), 3);
  return check_fibration(arrow, FibrationKind::Inner, bound);
}

// ---- inclusions -------------------------------------------------------------------

namespace {

CatPtr wide_subcategory(CatPtr c, const std::vector<char>& keep,
                        std::vector<int>* mor_names_out) {
  auto sub = std::make_shared<FiniteCategory>();
  sub->n_objects = c->n_objects;
  sub->object_names = c->object_names;
  std::vector<int> back;
  std::vector<int> fwd(c->morphisms.size(), -1);
  for (size_t m = 0; m < c->morphisms.size(); ++m)
    if (keep[m]) {
      fwd[m] = static_cast<int>(sub->morphisms.size());
      back.push_back(static_cast<int>(m));
      sub->morphisms.push_back(c->morphisms[m]);
    }
  for (int a = 0; a < c->n_objects; ++a)
    sub->id_of.push_back(fwd[static_cast<size_t>(c->id_of[static_cast<size_t>(a)])]);
  sub->comp.assign(sub->morphisms.size(), std::vector<int>(sub->morphisms.size(), -1));
  for (size_t g = 0; g < sub->morphisms.size(); ++g)
    for (size_t f = 0; f < sub->morphisms.size(); ++f) {
      int comp = c->comp[static_cast<size_t>(back[g])][static_cast<size_t>(back[f])];
      if (comp >= 0) sub->comp[g][f] = fwd[static_cast<size_t>(comp)];
    }
  sub->validate();
  if (mor_names_out) *mor_names_out = back;
  return sub;
}

}  // namespace

TripleInclusions triple_inclusions(const AdequateTriple& t, int bound) {
  TripleInclusions out;
  auto aeffv = std::make_shared<AeffVirtual>(t);
  Materialization am = materialize(aeffv, bound);
  const FiniteCategory& c = *t.c;

  std::vector<int> ing_back;
  CatPtr ing_cat = wide_subcategory(t.c, t.ingressive, &ing_back);
  auto ing_nerve = std::make_shared<NerveVirtual>(ing_cat);
  Materialization nm = materialize(ing_nerve, bound);
  auto grid_of_chain = [&](const std::vector<int>& ms, int obj_if_vertex) {
    int n = static_cast<int>(ms.size());
    const GridShape& sh = grid_shape(n);
    BurnsideSimplex g;
    g.n = n;
    g.obj.resize(sh.pairs.size());
    g.arr.resize(sh.quads.size());
    // chain objects in the ambient category
    std::vector<int> at(static_cast<size_t>(n) + 1);
    if (n == 0) at[0] = obj_if_vertex;
    else {
      at[0] = c.src(ing_back[static_cast<size_t>(ms[0])]);
      for (int k = 0; k < n; ++k)
        at[static_cast<size_t>(k) + 1] = c.tgt(ing_back[static_cast<size_t>(ms[static_cast<size_t>(k)])]);
    }
    auto chain_comp = [&](int a, int b) {  // composite at_a -> at_b in the ambient
      int cur = c.id_of[static_cast<size_t>(at[static_cast<size_t>(a)])];
      for (int k = a; k < b; ++k)
        cur = c.compose(ing_back[static_cast<size_t>(ms[static_cast<size_t>(k)])], cur);
      return cur;
    };
    for (size_t p = 0; p < sh.pairs.size(); ++p)
      g.obj[p] = at[static_cast<size_t>(sh.pairs[p].first)];
    for (size_t q = 0; q < sh.quads.size(); ++q) {
      auto [i, j, k, l] = sh.quads[q];
      (void)j;
      (void)l;
      g.arr[q] = chain_comp(i, k);
    }
    return AeffVirtual::encode(g);
  };
  out.ingressive_incl = map_from_assignment(nm, am, [&](const VSimplex& s) {
    auto [ms, ob] = NerveVirtual::decode(s);
    return grid_of_chain(ms, ob);
  });
  out.ingressive_incl.validate();

  std::vector<int> egr_back;
  CatPtr egr_cat = wide_subcategory(t.c, t.egressive, &egr_back);
  CatPtr egr_op = opposite_category(egr_cat);
  auto egr_nerve = std::make_shared<NerveVirtual>(egr_op);
  Materialization em = materialize(egr_nerve, bound);
  auto grid_of_opchain = [&](const std::vector<int>& ms, int obj_if_vertex) {
    int n = static_cast<int>(ms.size());
    const GridShape& sh = grid_shape(n);
    BurnsideSimplex g;
    g.n = n;
    g.obj.resize(sh.pairs.size());
    g.arr.resize(sh.quads.size());
    // op-chain objects y_0 <- y_1 <- ... in the ambient; arrows go y_j -> y_l
    std::vector<int> at(static_cast<size_t>(n) + 1);
    if (n == 0) at[0] = obj_if_vertex;
    else {
      at[0] = egr_op->src(ms[0]);
      for (int k = 0; k < n; ++k) at[static_cast<size_t>(k) + 1] = egr_op->tgt(ms[static_cast<size_t>(k)]);
    }
    auto down_comp = [&](int j, int l) {  // ambient composite y_j -> y_l, l <= j
      int cur = c.id_of[static_cast<size_t>(at[static_cast<size_t>(j)])];
      for (int k = j; k > l; --k)
        cur = c.compose(egr_back[static_cast<size_t>(ms[static_cast<size_t>(k) - 1])], cur);
      return cur;
    };
    for (size_t p = 0; p < sh.pairs.size(); ++p)
      g.obj[p] = at[static_cast<size_t>(sh.pairs[p].second)];
    for (size_t q = 0; q < sh.quads.size(); ++q) {
      auto [i, j, k, l] = sh.quads[q];
      (void)i;
      (void)k;
      g.arr[q] = down_comp(j, l);
    }
    return AeffVirtual::encode(g);
  };
  out.egressive_op_incl = map_from_assignment(em, am, [&](const VSimplex& s) {
    auto [ms, ob] = NerveVirtual::decode(s);
    return grid_of_opchain(ms, ob);
  });
  out.egressive_op_incl.validate();
  return out;
}

// ---- unfurling checker ----------------------------------------------------------------

Thm24Report check_thm24(const FunctorData& p, const AdequateTriple& tc,
                        const AdequateTriple& td, int bound) {
  Thm24Report rep;
  const FiniteCategory& c = *tc.c;
  const FiniteCategory& d = *td.c;
  if (!(*p.src == c) || !(*p.tgt == d))
    throw std::invalid_argument("check_thm24: functor endpoints");

  // preservation of the triple structure
  rep.h_preserves = true;
  for (size_t m = 0; m < c.morphisms.size() && rep.h_preserves; ++m) {
    if (tc.ing(static_cast<int>(m)) && !td.ing(p.on_mor(static_cast<int>(m))))
      rep.h_preserves = false;
    if (tc.egr(static_cast<int>(m)) && !td.egr(p.on_mor(static_cast<int>(m))))
      rep.h_preserves = false;
  }
  PullbackCache ccache(tc), dcache(td);
  for (size_t top = 0; top < c.morphisms.size() && rep.h_preserves; ++top)
    for (size_t left = 0; left < c.morphisms.size() && rep.h_preserves; ++left) {
      if (c.src(static_cast<int>(top)) != c.src(static_cast<int>(left))) continue;
      for (size_t right = 0; right < c.morphisms.size(); ++right) {
        if (c.src(static_cast<int>(right)) != c.tgt(static_cast<int>(top))) continue;
        for (size_t bottom = 0; bottom < c.morphisms.size(); ++bottom) {
          if (c.src(static_cast<int>(bottom)) != c.tgt(static_cast<int>(left))) continue;
          if (!ccache.ambigressive_pullback(static_cast<int>(top), static_cast<int>(left),
                                            static_cast<int>(right),
                                            static_cast<int>(bottom)))
            continue;
          if (!dcache.ambigressive_pullback(
                  p.on_mor(static_cast<int>(top)), p.on_mor(static_cast<int>(left)),
                  p.on_mor(static_cast<int>(right)), p.on_mor(static_cast<int>(bottom)))) {
            rep.h_preserves = false;
            rep.failure = "ambigressive pullback not preserved";
            break;
          }
        }
        if (!rep.h_preserves) break;
      }
    }

  if (!rep.h_preserves) {
    if (rep.failure.empty()) rep.failure = "triple structure not preserved";
    return rep;
  }

  // (2.4.1): cocartesian ingressive lifts of ingressives
  std::vector<int> ing_back_c, ing_back_d;
  CatPtr c_ing = wide_subcategory(tc.c, tc.ingressive, &ing_back_c);
  CatPtr d_ing = wide_subcategory(td.c, td.ingressive, &ing_back_d);
  FunctorData p_ing;
  p_ing.src = c_ing;
  p_ing.tgt = d_ing;
  {
    std::vector<int> fwd_d(d.morphisms.size(), -1);
    for (size_t k = 0; k < ing_back_d.size(); ++k)
      fwd_d[static_cast<size_t>(ing_back_d[k])] = static_cast<int>(k);
    for (int a = 0; a < c_ing->n_objects; ++a) p_ing.ob_map.push_back(p.on_ob(a));
    for (size_t m = 0; m < c_ing->morphisms.size(); ++m)
      p_ing.mor_map.push_back(
          fwd_d[static_cast<size_t>(p.on_mor(ing_back_c[m]))]);
    p_ing.validate();
  }
  rep.h_241 = true;
  for (size_t g = 0; g < d.morphisms.size() && rep.h_241; ++g) {
    if (!td.ing(static_cast<int>(g))) continue;
    for (int x = 0; x < c.n_objects; ++x) {
      if (p.on_ob(x) != d.src(static_cast<int>(g))) continue;
      bool found = false;
      for (size_t f = 0; f < c.morphisms.size() && !found; ++f) {
        if (!tc.ing(static_cast<int>(f))) continue;
        if (c.src(static_cast<int>(f)) != x) continue;
        if (p.on_mor(static_cast<int>(f)) != static_cast<int>(g)) continue;
        if (!is_cocartesian_morphism(p, static_cast<int>(f))) continue;
        // p_dagger-cocartesian for the restricted functor
        int f_sub = -1;
        for (size_t k = 0; k < ing_back_c.size(); ++k)
          if (ing_back_c[k] == static_cast<int>(f)) f_sub = static_cast<int>(k);
        if (!is_cocartesian_morphism(p_ing, f_sub)) continue;
        found = true;
      }
      if (!found) {
        rep.h_241 = false;
        rep.failure = "(2.4.1) fails over " + d.morphisms[g].name + " at object " +
                      c.object_names[static_cast<size_t>(x)];
      }
    }
  }

  // (2.4.2)
  rep.h_242 = true;
  for (size_t fp = 0; fp < c.morphisms.size() && rep.h_242; ++fp) {      // f'
    if (!tc.ing(static_cast<int>(fp))) continue;
    for (size_t phi = 0; phi < c.morphisms.size() && rep.h_242; ++phi) {  // x' -> x
      if (!tc.egr(static_cast<int>(phi))) continue;
      if (c.src(static_cast<int>(phi)) != c.src(static_cast<int>(fp))) continue;
      for (size_t f = 0; f < c.morphisms.size() && rep.h_242; ++f) {      // x -> y
        if (c.src(static_cast<int>(f)) != c.tgt(static_cast<int>(phi))) continue;
        if (!is_cocartesian_morphism(p, static_cast<int>(f))) continue;
        for (size_t psi = 0; psi < c.morphisms.size(); ++psi) {           // y' -> y
          if (!commutes(c, static_cast<int>(fp), static_cast<int>(phi),
                        static_cast<int>(psi), static_cast<int>(f)))
            continue;
          if (!dcache.ambigressive_pullback(
                  p.on_mor(static_cast<int>(fp)), p.on_mor(static_cast<int>(phi)),
                  p.on_mor(static_cast<int>(psi)), p.on_mor(static_cast<int>(f))))
            continue;
          bool cocart = is_cocartesian_morphism(p, static_cast<int>(fp));
          bool ambi = ccache.ambigressive_pullback(
              static_cast<int>(fp), static_cast<int>(phi), static_cast<int>(psi),
              static_cast<int>(f));
          if (cocart != ambi) {
            rep.h_242 = false;
            rep.failure = "(2.4.2) fails at square over " + c.morphisms[fp].name;
            break;
          }
        }
      }
    }
  }
  rep.hypotheses_ok = rep.h_preserves && rep.h_241 && rep.h_242;
  if (!rep.hypotheses_ok) return rep;

  // conclusion: A^eff(p) is an inner fibration up to the bound
  auto total = aeff_target(tc, bound - 1);
  auto base = aeff_target(td, bound - 1);
  VirtualMapFn aeff_p = [p](const VSimplex& s) {
    BurnsideSimplex g = AeffVirtual::decode(s);
    for (int& o : g.obj) o = p.on_ob(o);
    for (int& m : g.arr) m = p.on_mor(m);
    return AeffVirtual::encode(g);
  };
  auto arrow = arrow_between(total, base, aeff_p, 3, 3);
  auto inner = check_fibration(arrow, FibrationKind::Inner, bound);
  rep.conclusion_inner = inner.pass;
  if (!inner.pass) {
    rep.failure = "A^eff(p) inner fibration: " + inner.witness;
    return rep;
  }

  // conclusion: asserted span edges are cocartesian
  rep.conclusion_cocartesian = true;
  const GridShape& sh1 = grid_shape(1);
  int q_left = sh1.quad_index.at({0, 1, 0, 0});
  int q_top = sh1.quad_index.at({0, 1, 1, 1});
  for (const auto& e : total.pool(1)) {
    BurnsideSimplex g = AeffVirtual::decode(e);
    int phi = g.arr[static_cast<size_t>(q_left)];
    int psi = g.arr[static_cast<size_t>(q_top)];
    if (!is_cartesian_morphism(p, phi)) continue;
    if (!is_cocartesian_morphism(p, psi)) continue;
    ++rep.span_edges_checked;
    auto cc = check_cocartesian_edge(arrow, e, bound);
    if (!cc.pass) {
      rep.conclusion_cocartesian = false;
      rep.failure = "asserted span edge fails the cocartesian test";
      break;
    }
  }
  return rep;
}

// ---- duals --------------------------------------------------------------------------------

AdequateTriple fibration_triple(const FunctorData& p) {
  AdequateTriple t;
  t.c = p.src;
  t.ingressive.assign(p.src->morphisms.size(), 0);
  t.egressive.assign(p.src->morphisms.size(), 0);
  for (size_t m = 0; m < p.src->morphisms.size(); ++m) {
    if (p.tgt->is_iso(p.on_mor(static_cast<int>(m)))) t.ingressive[m] = 1;
    if (is_cartesian_morphism(p, static_cast<int>(m))) t.egressive[m] = 1;
  }
  return t;
}

namespace {

// A Burnside virtual restricted to simplices whose base grid lies in the
// image of the op-nerve of the base.
class FilteredAeff final : public VirtualSSet {
 public:
  FilteredAeff(std::shared_ptr<AeffVirtual> inner, FunctorData proj, CatPtr base_op)
      : inner_(std::move(inner)), proj_(std::move(proj)), base_op_(std::move(base_op)) {}

  std::vector<VSimplex> simplices(int d) const override {
    std::vector<VSimplex> out;
    for (const auto& s : inner_->simplices(d))
      if (member(s)) out.push_back(s);
    return out;
  }
  VSimplex face(const VSimplex& s, int i) const override { return inner_->face(s, i); }
  VSimplex degeneracy(const VSimplex& s, int i) const override {
    return inner_->degeneracy(s, i);
  }
  std::vector<VSimplex> cofill(int d, const std::vector<VSimplex>& faces) const override {
    std::vector<VSimplex> out;
    for (const auto& s : inner_->cofill(d, faces))
      if (member(s)) out.push_back(s);
    return out;
  }

  bool member(const VSimplex& s) const {
    return image_table(s.dim).count(base_grid_key(s)) > 0;
  }
  VSimplex base_chain(const VSimplex& s) const {
    return image_table(s.dim).at(base_grid_key(s));
  }

 private:
  VSimplex base_grid_key(const VSimplex& s) const {
    BurnsideSimplex g = AeffVirtual::decode(s);
    for (int& o : g.obj) o = proj_.on_ob(o);
    for (int& m : g.arr) m = proj_.on_mor(m);
    return AeffVirtual::encode(g);
  }

  // base grid of an op-chain -> the chain handle
  const std::map<VSimplex, VSimplex>& image_table(int n) const {
    auto it = tables_.find(n);
    if (it != tables_.end()) return it->second;
    std::map<VSimplex, VSimplex> table;
    NerveVirtual nv(base_op_);
    const FiniteCategory& s = *proj_.tgt;
    for (const auto& ch : nv.simplices(n)) {
      auto [ms, ob] = NerveVirtual::decode(ch);
      const GridShape& sh = grid_shape(n);
      BurnsideSimplex g;
      g.n = n;
      g.obj.resize(sh.pairs.size());
      g.arr.resize(sh.quads.size());
      std::vector<int> at(static_cast<size_t>(n) + 1);
      if (n == 0) at[0] = ob;
      else {
        at[0] = base_op_->src(ms[0]);
        for (int k = 0; k < n; ++k) at[static_cast<size_t>(k) + 1] = base_op_->tgt(ms[static_cast<size_t>(k)]);
      }
      auto down_comp = [&](int j, int l) {
        int cur = s.id_of[static_cast<size_t>(at[static_cast<size_t>(j)])];
        for (int k = j; k > l; --k) cur = s.compose(ms[static_cast<size_t>(k) - 1], cur);
        return cur;
      };
      for (size_t p = 0; p < sh.pairs.size(); ++p) g.obj[p] = at[static_cast<size_t>(sh.pairs[p].second)];
      for (size_t q = 0; q < sh.quads.size(); ++q) {
        auto [i, j, k, l] = sh.quads[q];
        (void)i;
        (void)k;
        g.arr[q] = down_comp(j, l);
      }
      table.emplace(AeffVirtual::encode(g), ch);
    }
    return tables_.emplace(n, std::move(table)).first->second;
  }

  std::shared_ptr<AeffVirtual> inner_;
  FunctorData proj_;
  CatPtr base_op_;
  mutable std::map<int, std::map<VSimplex, VSimplex>> tables_;
};

}  // namespace

DualResult right_dual(const FunctorData& p, int enumerate_bound) {
  // validate the cartesian-fibration input: every base arrow with a lifted
  // target admits a cartesian lift
  for (size_t g = 0; g < p.tgt->morphisms.size(); ++g)
    for (int y = 0; y < p.src->n_objects; ++y) {
      if (p.on_ob(y) != p.tgt->tgt(static_cast<int>(g))) continue;
      bool found = false;
      for (size_t f = 0; f < p.src->morphisms.size() && !found; ++f)
        if (p.src->tgt(static_cast<int>(f)) == y &&
            p.on_mor(static_cast<int>(f)) == static_cast<int>(g) &&
            is_cartesian_morphism(p, static_cast<int>(f)))
          found = true;
      if (!found) throw std::runtime_error("right_dual: not a cartesian fibration");
    }
  DualResult out;
  out.triple = fibration_triple(p);
  auto adequacy = check_adequate(out.triple);
  if (!adequacy.ok)
    throw std::runtime_error("right_dual: fibration triple not adequate: " +
                             adequacy.failure);
  out.base_op = opposite_category(p.tgt);
  auto inner = std::make_shared<AeffVirtual>(out.triple);
  auto filtered = std::make_shared<FilteredAeff>(inner, p, out.base_op);
  out.total.v = filtered;
  out.total.enumerate_bound = enumerate_bound;
  out.base = nerve_target(out.base_op, enumerate_bound);
  out.proj = [filtered](const VSimplex& s) { return filtered->base_chain(s); };
  return out;
}

DualResult left_dual(const FunctorData& p, int enumerate_bound) {
  // opposite input: p^op is a cartesian fibration over S^op
  CatPtr x_op = opposite_category(p.src);
  CatPtr s_op = opposite_category(p.tgt);
  FunctorData p_op = opposite_functor(p, x_op, s_op);
  DualResult rd = right_dual(p_op, enumerate_bound);
  DualResult out;
  out.triple = rd.triple;
  out.base_op = opposite_category(rd.base_op);  // = S, then presented op again below
  out.total.v = std::make_shared<OppositeVirtual>(rd.total.v);
  out.total.enumerate_bound = enumerate_bound;
  out.base.v = std::make_shared<OppositeVirtual>(rd.base.v);
  out.base.enumerate_bound = enumerate_bound;
  out.proj = rd.proj;  // opposite wrappers share handles
  return out;
}

}  // namespace bkit
