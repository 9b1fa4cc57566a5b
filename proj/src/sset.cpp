#include "bkit/sset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "bkit/smap.hpp"

namespace bkit {

int SimplicialSet::dim() const {
  for (int d = dim_bound(); d >= 0; --d)
    if (!dims_[static_cast<size_t>(d)].empty()) return d;
  return -1;
}

int SimplicialSet::count(int d) const {
  if (d < 0 || d > dim_bound()) return 0;
  return static_cast<int>(dims_[static_cast<size_t>(d)].size());
}

size_t SimplicialSet::total_nondeg() const {
  size_t n = 0;
  for (const auto& lv : dims_) n += lv.size();
  return n;
}

const NondegSimplex& SimplicialSet::simplex(SimplexId id) const {
  return dims_.at(static_cast<size_t>(id.dim)).at(static_cast<size_t>(id.idx));
}

const std::vector<NondegSimplex>& SimplicialSet::level(int d) const {
  static const std::vector<NondegSimplex> kEmpty;
  if (d < 0 || d > dim_bound()) return kEmpty;
  return dims_[static_cast<size_t>(d)];
}

SimplexId SimplicialSet::add_simplex(int d, std::string name,
                                     std::vector<SimplexRef> faces) {
  if (d < 0) throw std::invalid_argument("add_simplex: negative dimension");
  if (d > 0 && faces.size() != static_cast<size_t>(d) + 1)
    throw std::invalid_argument("add_simplex: face count mismatch");
  if (dims_.size() <= static_cast<size_t>(d)) dims_.resize(static_cast<size_t>(d) + 1);
  dims_[static_cast<size_t>(d)].push_back({std::move(name), std::move(faces)});
  return {d, static_cast<int>(dims_[static_cast<size_t>(d)].size()) - 1};
}

int SimplicialSet::find(int d, const std::string& name) const {
  if (d < 0 || d > dim_bound()) return -1;
  const auto& lv = dims_[static_cast<size_t>(d)];
  for (size_t k = 0; k < lv.size(); ++k)
    if (lv[k].name == name) return static_cast<int>(k);
  return -1;
}

DegeneracyWord word_insert(const DegeneracyWord& w, int i) {
  DegeneracyWord out;
  size_t k = 0;
  int cur = i;
  // s_i s_j = s_{j+1} s_i for i <= j: bubble the new letter rightwards.
  while (k < w.idx.size() && cur <= w.idx[k]) {
    out.idx.push_back(w.idx[k] + 1);
    ++k;
  }
  out.idx.push_back(cur);
  for (; k < w.idx.size(); ++k) out.idx.push_back(w.idx[k]);
  return out;
}

SimplexRef SimplicialSet::degenerate(const SimplexRef& r, int i) const {
  if (i < 0 || i > r.dim()) throw std::invalid_argument("degenerate: bad index");
  return {word_insert(r.word, i), r.target};
}

SimplexRef SimplicialSet::face(const SimplexRef& r, int i) const {
  int d = r.dim();
  if (d <= 0 || i < 0 || i > d) throw std::invalid_argument("face: bad index");
  if (r.word.empty()) return simplex(r.target).faces[static_cast<size_t>(i)];
  int j = r.word.idx[0];
  SimplexRef rest{{std::vector<int>(r.word.idx.begin() + 1, r.word.idx.end())},
                  r.target};
  if (i == j || i == j + 1) return rest;
  if (i < j) return degenerate(face(rest, i), j - 1);
  return degenerate(face(rest, i - 1), j);
}

SimplexRef SimplicialSet::act(const DeltaMorphism& f, const SimplexRef& r) const {
  if (f.target != r.dim()) throw std::invalid_argument("act: dimension mismatch");
  EpiMonoFactors fac = factor_epi_mono(f);
  SimplexRef cur = r;
  for (int i : fac.missed) cur = face(cur, i);       // largest first
  for (int j : fac.repeated) cur = degenerate(cur, j);  // smallest first
  return cur;
}

std::vector<SimplexRef> SimplicialSet::all_refs(int d) const {
  std::vector<SimplexRef> out;
  // Degeneracy words from dimension t to d correspond to monotone epis
  // [d] ->> [t]; generate them as strictly decreasing index sequences.
  for (int t = 0; t <= d && t <= dim_bound(); ++t) {
    const auto& lv = dims_[static_cast<size_t>(t)];
    if (lv.empty()) continue;
    std::vector<DegeneracyWord> words;
    DegeneracyWord w;
    auto rec = [&](auto&& self, int remaining, int maxidx, int mindim) -> void {
      if (remaining == 0) {
        words.push_back(w);
        return;
      }
      // next letter s_i acts on a simplex of dimension mindim + remaining - 1
      for (int i = std::min(maxidx, mindim + remaining - 1); i >= 0; --i) {
        w.idx.push_back(i);
        self(self, remaining - 1, i - 1, mindim);
        w.idx.pop_back();
      }
    };
    rec(rec, d - t, d - 1, t);
    for (size_t k = 0; k < lv.size(); ++k)
      for (const auto& word : words)
        out.push_back({word, {t, static_cast<int>(k)}});
  }
  return out;
}

std::vector<SimplexId> SimplicialSet::vertex_tuple(const SimplexRef& r) const {
  std::vector<SimplexId> out;
  int d = r.dim();
  for (int v = 0; v <= d; ++v) {
    DeltaMorphism pick = DeltaMorphism::constant(0, d, v);
    out.push_back(act(pick, r).target);
  }
  return out;
}

void SimplicialSet::validate() const {
  for (int d = 0; d <= dim_bound(); ++d) {
    for (int k = 0; k < count(d); ++k) {
      const auto& s = simplex({d, k});
      if (d == 0) {
        if (!s.faces.empty()) throw std::runtime_error("vertex with faces");
        continue;
      }
      if (s.faces.size() != static_cast<size_t>(d) + 1)
        throw std::runtime_error("face count mismatch at " + s.name);
      for (const auto& f : s.faces) {
        if (f.dim() != d - 1) throw std::runtime_error("face dimension mismatch");
        if (f.target.dim < 0 || f.target.dim > dim_bound() ||
            f.target.idx < 0 || f.target.idx >= count(f.target.dim))
          throw std::runtime_error("dangling face reference");
        for (size_t t = 1; t < f.word.idx.size(); ++t)
          if (f.word.idx[t - 1] <= f.word.idx[t])
            throw std::runtime_error("degeneracy word not strictly decreasing");
      }
      // Simplicial identities d_i d_j = d_{j-1} d_i, i < j.
      if (d >= 2) {
        SimplexRef r = nondeg_ref(d, k);
        for (int j = 1; j <= d; ++j)
          for (int i = 0; i < j; ++i)
            if (face(face(r, j), i) != face(face(r, i), j - 1))
              throw std::runtime_error("simplicial identity fails at " + s.name);
      }
    }
  }
}

// ---- standard objects ------------------------------------------------------

std::string vertex_word_name(const std::vector<int>& verts) {
  std::string s;
  for (int v : verts) {
    if (!s.empty() && v > 9) s += ".";
    s += std::to_string(v);
  }
  return s;
}

SSetPtr empty_sset() { return std::make_shared<SimplicialSet>(); }

namespace {

// Builds the subcomplex object alone (no ambient, no inclusion).
std::pair<SSetPtr, std::map<std::vector<int>, SimplexId>> build_cells(
    int n, const std::vector<std::vector<int>>& faces) {
  std::set<std::vector<int>> cells;
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v > n) throw std::invalid_argument("subcomplex: vertex out of range");
    size_t m = f.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> sub;
      for (size_t b = 0; b < m; ++b)
        if (mask & (1u << b)) sub.push_back(f[b]);
      cells.insert(sub);
    }
  }
  auto obj = std::make_shared<SimplicialSet>();
  std::map<std::vector<int>, SimplexId> index;
  std::vector<std::vector<int>> ordered(cells.begin(), cells.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& cell : ordered) {
    int d = static_cast<int>(cell.size()) - 1;
    std::vector<SimplexRef> fs;
    for (int i = 0; i <= d && d > 0; ++i) {
      std::vector<int> face_cell;
      for (int k = 0; k <= d; ++k)
        if (k != i) face_cell.push_back(cell[static_cast<size_t>(k)]);
      fs.push_back({{}, index.at(face_cell)});
    }
    index[cell] = obj->add_simplex(d, vertex_word_name(cell), std::move(fs));
  }
  return {obj, index};
}

}  // namespace

SimplicialMap simplex_subcomplex(int n, const std::vector<std::vector<int>>& faces) {
  auto [obj, index] = build_cells(n, faces);
  SSetPtr ambient = standard_simplex(n);
  SimplicialMap incl;
  incl.src = obj;
  incl.tgt = ambient;
  incl.assign.resize(static_cast<size_t>(obj->dim_bound()) + 1);
  for (const auto& [cell, id] : index) {
    int d = static_cast<int>(cell.size()) - 1;
    int tk = ambient->find(d, vertex_word_name(cell));
    if (tk < 0) throw std::logic_error("subcomplex: cell missing in ambient");
    auto& lv = incl.assign[static_cast<size_t>(d)];
    if (lv.size() <= static_cast<size_t>(id.idx)) lv.resize(static_cast<size_t>(id.idx) + 1);
    lv[static_cast<size_t>(id.idx)] = nondeg_ref(d, tk);
  }
  return incl;
}

SSetPtr standard_simplex(int n) {
  if (n < 0) throw std::invalid_argument("standard_simplex: negative n");
  static std::map<int, SSetPtr> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> all;
  for (int v = 0; v <= n; ++v) all.push_back(v);
  SSetPtr obj = build_cells(n, {all}).first;
  cache.emplace(n, obj);
  return obj;
}

SimplicialMap boundary_inclusion(int n) {
  if (n < 1) {
    if (n == 0) {
      SimplicialMap incl;
      incl.src = empty_sset();
      incl.tgt = standard_simplex(0);
      return incl;
    }
    throw std::invalid_argument("boundary_inclusion: n < 0");
  }
  std::vector<std::vector<int>> facets;
  for (int s = 0; s <= n; ++s) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != s) f.push_back(v);
    facets.push_back(f);
  }
  return simplex_subcomplex(n, facets);
}

SimplicialMap horn_inclusion(int n, const std::vector<int>& S) {
  std::set<int> s(S.begin(), S.end());
  if (s.empty() || static_cast<int>(s.size()) > n)
    throw std::invalid_argument("horn: S must be a nonempty proper subset");
  for (int v : s)
    if (v < 0 || v > n) throw std::invalid_argument("horn: S out of range");
  std::vector<std::vector<int>> facets;
  for (int miss = 0; miss <= n; ++miss) {
    if (s.count(miss)) continue;
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != miss) f.push_back(v);
    facets.push_back(f);
  }
  return simplex_subcomplex(n, facets);
}

SimplicialMap spine_inclusion_on(const std::vector<int>& K, int n) {
  if (K.empty()) throw std::invalid_argument("spine: empty vertex set");
  for (size_t k = 1; k < K.size(); ++k)
    if (K[k] <= K[k - 1]) throw std::invalid_argument("spine: K not increasing");
  std::vector<std::vector<int>> cells;
  if (K.size() == 1) cells.push_back({K[0]});
  for (size_t k = 0; k + 1 < K.size(); ++k) cells.push_back({K[k], K[k + 1]});
  return simplex_subcomplex(n, cells);
}

SimplicialMap spine_inclusion(int n) {
  std::vector<int> K;
  for (int v = 0; v <= n; ++v) K.push_back(v);
  return spine_inclusion_on(K, n);
}

SimplicialMap j_complex_inclusion(int n) {
  if (n < 2) throw std::invalid_argument("j_complex: n < 2");
  std::vector<std::vector<int>> cells = {{0, 1}, {0, 2}};
  for (int i = 2; i + 1 <= n; ++i) cells.push_back({i, i + 1});
  return simplex_subcomplex(n, cells);
}

}  // namespace bkit
