#include "bkit/smap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bkit {

SimplexRef SimplicialMap::apply(const SimplexRef& r) const {
  const SimplexRef& base =
      assign.at(static_cast<size_t>(r.target.dim)).at(static_cast<size_t>(r.target.idx));
  SimplexRef out = base;
  for (auto it = r.word.idx.rbegin(); it != r.word.idx.rend(); ++it)
    out = tgt->degenerate(out, *it);
  return out;
}

void SimplicialMap::validate() const {
  if (!src || !tgt) throw std::runtime_error("map without endpoints");
  if (assign.size() < static_cast<size_t>(src->dim_bound()) + 1 && src->dim() >= 0)
    throw std::runtime_error("map: assignment table too short");
  for (int d = 0; d <= src->dim_bound(); ++d) {
    if (static_cast<int>(assign[static_cast<size_t>(d)].size()) != src->count(d))
      throw std::runtime_error("map: assignment count mismatch");
    for (int k = 0; k < src->count(d); ++k) {
      const SimplexRef& img = assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
      if (img.dim() != d) throw std::runtime_error("map: image dimension mismatch");
      for (int i = 0; i <= d && d > 0; ++i) {
        SimplexRef lhs = tgt->face(img, i);
        SimplexRef rhs = apply(src->simplex({d, k}).faces[static_cast<size_t>(i)]);
        if (lhs != rhs) throw std::runtime_error("map: faces do not commute");
      }
    }
  }
}

bool SimplicialMap::is_mono() const {
  // Injective on nondegenerate simplices per dimension, with nondegenerate
  // images; equivalent to dimensionwise injectivity on all simplices.
  for (int d = 0; d <= src->dim_bound(); ++d) {
    std::vector<SimplexRef> seen;
    for (int k = 0; k < src->count(d); ++k) {
      const SimplexRef& img = assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
      if (!img.nondegenerate()) return false;
      if (std::find(seen.begin(), seen.end(), img) != seen.end()) return false;
      seen.push_back(img);
    }
  }
  return true;
}

bool SimplicialMap::is_iso() const {
  if (!is_mono()) return false;
  for (int d = 0; d <= std::max(src->dim_bound(), tgt->dim_bound()); ++d)
    if (src->count(d) != tgt->count(d)) return false;
  return true;
}

SimplicialMap identity_map(SSetPtr x) {
  SimplicialMap f;
  f.src = f.tgt = x;
  f.assign.resize(static_cast<size_t>(x->dim_bound()) + 1);
  for (int d = 0; d <= x->dim_bound(); ++d)
    for (int k = 0; k < x->count(d); ++k)
      f.assign[static_cast<size_t>(d)].push_back(nondeg_ref(d, k));
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!same_sset(*f.tgt, *g.src)) throw std::invalid_argument("compose: middle mismatch");
  SimplicialMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.assign.resize(f.assign.size());
  for (size_t d = 0; d < f.assign.size(); ++d)
    for (const auto& r : f.assign[d]) h.assign[d].push_back(g.apply(r));
  return h;
}

std::optional<SimplicialMap> inverse(const SimplicialMap& f) {
  if (!f.is_iso()) return std::nullopt;
  SimplicialMap g;
  g.src = f.tgt;
  g.tgt = f.src;
  g.assign.resize(static_cast<size_t>(f.tgt->dim_bound()) + 1);
  for (size_t d = 0; d < g.assign.size(); ++d)
    g.assign[d].resize(f.tgt->level(static_cast<int>(d)).size());
  for (int d = 0; d <= f.src->dim_bound(); ++d)
    for (int k = 0; k < f.src->count(d); ++k) {
      SimplexId img = f.assign[static_cast<size_t>(d)][static_cast<size_t>(k)].target;
      g.assign[static_cast<size_t>(d)][static_cast<size_t>(img.idx)] = nondeg_ref(d, k);
    }
  return g;
}

bool same_sset(const SimplicialSet& a, const SimplicialSet& b) { return a == b; }

namespace {

// Dimension-ascending backtracking over nondegenerate cells. Candidates for a
// d-cell are target d-cells whose face vector matches the already assigned
// images; forward-checks nothing beyond that (faces of a cell are always
// assigned before the cell itself).
struct IsoSearch {
  const SimplicialSet& A;
  const SimplicialSet& B;
  std::vector<std::vector<int>> choice;      // per dim, per A-cell: B index or -1
  std::vector<std::vector<bool>> used;       // per dim, per B-cell

  explicit IsoSearch(const SimplicialSet& a, const SimplicialSet& b) : A(a), B(b) {
    int top = std::max(a.dim_bound(), b.dim_bound());
    choice.resize(static_cast<size_t>(top) + 1);
    used.resize(static_cast<size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
      choice[static_cast<size_t>(d)].assign(static_cast<size_t>(a.count(d)), -1);
      used[static_cast<size_t>(d)].assign(static_cast<size_t>(b.count(d)), false);
    }
  }

  SimplexRef mapped(const SimplexRef& r) const {
    SimplexRef out{{}, {r.target.dim,
                        choice[static_cast<size_t>(r.target.dim)]
                              [static_cast<size_t>(r.target.idx)]}};
    for (auto it = r.word.idx.rbegin(); it != r.word.idx.rend(); ++it)
      out = B.degenerate(out, *it);
    return out;
  }

  bool faces_match(int d, int ak, int bk) const {
    if (d == 0) return true;
    const auto& af = A.simplex({d, ak}).faces;
    const auto& bf = B.simplex({d, bk}).faces;
    for (size_t i = 0; i < af.size(); ++i)
      if (mapped(af[i]) != bf[i]) return false;
    return true;
  }

  bool run(int d, int k) {
    if (d > A.dim_bound() && d > B.dim_bound()) return true;
    if (k >= A.count(d)) return run(d + 1, 0);
    for (int bk = 0; bk < B.count(d); ++bk) {
      if (used[static_cast<size_t>(d)][static_cast<size_t>(bk)]) continue;
      if (!faces_match(d, k, bk)) continue;
      choice[static_cast<size_t>(d)][static_cast<size_t>(k)] = bk;
      used[static_cast<size_t>(d)][static_cast<size_t>(bk)] = true;
      if (run(d, k + 1)) return true;
      choice[static_cast<size_t>(d)][static_cast<size_t>(k)] = -1;
      used[static_cast<size_t>(d)][static_cast<size_t>(bk)] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<SimplicialMap> iso_check(SSetPtr a, SSetPtr b) {
  for (int d = 0; d <= std::max(a->dim_bound(), b->dim_bound()); ++d)
    if (a->count(d) != b->count(d)) return std::nullopt;
  IsoSearch search(*a, *b);
  if (!search.run(0, 0)) return std::nullopt;
  SimplicialMap f;
  f.src = a;
  f.tgt = b;
  f.assign.resize(static_cast<size_t>(a->dim_bound()) + 1);
  for (int d = 0; d <= a->dim_bound(); ++d)
    for (int k = 0; k < a->count(d); ++k)
      f.assign[static_cast<size_t>(d)].push_back(
          nondeg_ref(d, search.choice[static_cast<size_t>(d)][static_cast<size_t>(k)]));
  return f;
}

std::optional<MapIso> map_iso_check(const SimplicialMap& f, const SimplicialMap& g) {
  // Search target isos beta and derive alpha from beta . f = g . alpha,
  // using that g is a monomorphism when it is an inclusion-like map.
  for (int d = 0; d <= std::max(f.src->dim_bound(), g.src->dim_bound()); ++d)
    if (f.src->count(d) != g.src->count(d)) return std::nullopt;
  for (int d = 0; d <= std::max(f.tgt->dim_bound(), g.tgt->dim_bound()); ++d)
    if (f.tgt->count(d) != g.tgt->count(d)) return std::nullopt;

  IsoSearch search(*f.tgt, *g.tgt);
  // Enumerate target isos until one of them transports f onto g.
  std::optional<MapIso> found;
  auto try_current = [&]() -> bool {
    SimplicialMap beta;
    beta.src = f.tgt;
    beta.tgt = g.tgt;
    beta.assign.resize(static_cast<size_t>(f.tgt->dim_bound()) + 1);
    for (int d = 0; d <= f.tgt->dim_bound(); ++d)
      for (int k = 0; k < f.tgt->count(d); ++k)
        beta.assign[static_cast<size_t>(d)].push_back(nondeg_ref(
            d, search.choice[static_cast<size_t>(d)][static_cast<size_t>(k)]));
    // alpha(x) must satisfy g(alpha(x)) = beta(f(x)): invert g on images.
    SimplicialMap alpha;
    alpha.src = f.src;
    alpha.tgt = g.src;
    alpha.assign.resize(static_cast<size_t>(f.src->dim_bound()) + 1);
    for (int d = 0; d <= f.src->dim_bound(); ++d)
      for (int k = 0; k < f.src->count(d); ++k) {
        SimplexRef want = beta.apply(f.assign[static_cast<size_t>(d)][static_cast<size_t>(k)]);
        bool ok = false;
        for (int j = 0; j < g.src->count(d) && !ok; ++j)
          if (g.assign[static_cast<size_t>(d)][static_cast<size_t>(j)] == want) {
            alpha.assign[static_cast<size_t>(d)].push_back(nondeg_ref(d, j));
            ok = true;
          }
        if (!ok) return false;
      }
    if (!alpha.is_iso()) return false;
    alpha.validate();
    found = MapIso{alpha, beta};
    return true;
  };

  // Re-run the iso search with a hook at full assignments.
  struct Driver {
    IsoSearch& s;
    std::function<bool()> hook;
    bool run(int d, int k) {
      if (d > s.A.dim_bound() && d > s.B.dim_bound()) return hook();
      if (k >= s.A.count(d)) return run(d + 1, 0);
      for (int bk = 0; bk < s.B.count(d); ++bk) {
        if (s.used[static_cast<size_t>(d)][static_cast<size_t>(bk)]) continue;
        if (!s.faces_match(d, k, bk)) continue;
        s.choice[static_cast<size_t>(d)][static_cast<size_t>(k)] = bk;
        s.used[static_cast<size_t>(d)][static_cast<size_t>(bk)] = true;
        if (run(d, k + 1)) return true;
        s.choice[static_cast<size_t>(d)][static_cast<size_t>(k)] = -1;
        s.used[static_cast<size_t>(d)][static_cast<size_t>(bk)] = false;
      }
      return false;
    }
  };
  Driver driver{search, try_current};
  if (!driver.run(0, 0)) return std::nullopt;
  return found;
}

}  // namespace bkit
