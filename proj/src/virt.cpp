#include "bkit/virt.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkit {

std::vector<VSimplex> VirtualSSet::cofill(int d, const std::vector<VSimplex>& faces) const {
  std::vector<VSimplex> out;
  for (const auto& c : simplices(d)) {
    bool ok = true;
    for (int i = 0; i <= d && ok; ++i)
      if (face(c, i) != faces[static_cast<size_t>(i)]) ok = false;
    if (ok) out.push_back(c);
  }
  return out;
}

VSimplex VirtualSSet::act(const DeltaMorphism& f, const VSimplex& s) const {
  if (f.target != s.dim) throw std::invalid_argument("virtual act: dimension mismatch");
  EpiMonoFactors fac = factor_epi_mono(f);
  VSimplex cur = s;
  for (int i : fac.missed) cur = face(cur, i);
  for (int j : fac.repeated) cur = degeneracy(cur, j);
  return cur;
}

bool VirtualSSet::is_degenerate(const VSimplex& s) const {
  for (int i = 0; i < s.dim; ++i)
    if (degeneracy(face(s, i), i) == s) return true;
  return false;
}

// ---- FiniteVirtual ---------------------------------------------------------

VSimplex FiniteVirtual::encode(const SimplexRef& r) {
  VSimplex v;
  v.dim = r.dim();
  v.key.push_back(static_cast<int64_t>(r.word.idx.size()));
  for (int i : r.word.idx) v.key.push_back(i);
  v.key.push_back(r.target.dim);
  v.key.push_back(r.target.idx);
  return v;
}

SimplexRef FiniteVirtual::decode(const VSimplex& v) {
  SimplexRef r;
  size_t len = static_cast<size_t>(v.key.at(0));
  for (size_t k = 0; k < len; ++k) r.word.idx.push_back(static_cast<int>(v.key.at(1 + k)));
  r.target.dim = static_cast<int>(v.key.at(1 + len));
  r.target.idx = static_cast<int>(v.key.at(2 + len));
  return r;
}

std::vector<VSimplex> FiniteVirtual::simplices(int d) const {
  std::vector<VSimplex> out;
  for (const auto& r : s_->all_refs(d)) out.push_back(encode(r));
  return out;
}

VSimplex FiniteVirtual::face(const VSimplex& s, int i) const {
  return encode(s_->face(decode(s), i));
}

VSimplex FiniteVirtual::degeneracy(const VSimplex& s, int i) const {
  return encode(s_->degenerate(decode(s), i));
}

std::vector<VSimplex> FiniteVirtual::cofill(int d, const std::vector<VSimplex>& faces) const {
  // Face-vector filter over the d-refs; fine at the scales finite objects have.
  return VirtualSSet::cofill(d, faces);
}

// ---- ProductVirtual --------------------------------------------------------

VSimplex ProductVirtual::pair(const VSimplex& x, const VSimplex& y) {
  VSimplex v;
  v.dim = x.dim;
  v.key.push_back(static_cast<int64_t>(x.key.size()));
  for (int64_t k : x.key) v.key.push_back(k);
  for (int64_t k : y.key) v.key.push_back(k);
  return v;
}

std::pair<VSimplex, VSimplex> ProductVirtual::unpair(const VSimplex& v) {
  size_t n1 = static_cast<size_t>(v.key.at(0));
  VSimplex x, y;
  x.dim = v.dim;
  y.dim = v.dim;
  x.key.assign(v.key.begin() + 1, v.key.begin() + 1 + static_cast<long>(n1));
  y.key.assign(v.key.begin() + 1 + static_cast<long>(n1), v.key.end());
  return {x, y};
}

std::vector<VSimplex> ProductVirtual::simplices(int d) const {
  std::vector<VSimplex> out;
  auto xs = a_->simplices(d);
  auto ys = b_->simplices(d);
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(pair(x, y));
  return out;
}

VSimplex ProductVirtual::face(const VSimplex& s, int i) const {
  auto [x, y] = unpair(s);
  return pair(a_->face(x, i), b_->face(y, i));
}

VSimplex ProductVirtual::degeneracy(const VSimplex& s, int i) const {
  auto [x, y] = unpair(s);
  return pair(a_->degeneracy(x, i), b_->degeneracy(y, i));
}

std::vector<VSimplex> ProductVirtual::cofill(int d, const std::vector<VSimplex>& faces) const {
  std::vector<VSimplex> fx, fy;
  for (const auto& f : faces) {
    auto [x, y] = unpair(f);
    fx.push_back(x);
    fy.push_back(y);
  }
  std::vector<VSimplex> out;
  for (const auto& x : a_->cofill(d, fx))
    for (const auto& y : b_->cofill(d, fy)) out.push_back(pair(x, y));
  return out;
}

int ProductVirtual::dim_hint() const {
  int da = a_->dim_hint(), db = b_->dim_hint();
  if (da < 0 || db < 0) return -1;
  return da + db;
}

// ---- materialization -------------------------------------------------------

SimplexRef Materialization::ref_of(const VSimplex& v) const {
  auto it = to_ref.find(v);
  if (it != to_ref.end()) return it->second;
  for (int i = 0; i < v.dim; ++i) {
    VSimplex f = origin->face(v, i);
    if (origin->degeneracy(f, i) == v) {
      SimplexRef inner = ref_of(f);
      SimplexRef out{word_insert(inner.word, i), inner.target};
      to_ref.emplace(v, out);
      return out;
    }
  }
  throw std::runtime_error("materialization: handle beyond bound");
}

VSimplex Materialization::vs_of(const SimplexRef& r) const {
  VSimplex v = nondeg[static_cast<size_t>(r.target.dim)][static_cast<size_t>(r.target.idx)];
  for (auto it = r.word.idx.rbegin(); it != r.word.idx.rend(); ++it)
    v = origin->degeneracy(v, *it);
  return v;
}

Materialization materialize(VirtPtr v, int bound) {
  Materialization mat;
  mat.origin = v;
  mat.bound = bound;
  auto obj = std::make_shared<SimplicialSet>();
  mat.nondeg.resize(static_cast<size_t>(bound) + 1);

  // Normalizes a handle whose faces at lower dimensions are already resolved.
  std::function<SimplexRef(const VSimplex&)> resolve = [&](const VSimplex& s) -> SimplexRef {
    auto it = mat.to_ref.find(s);
    if (it != mat.to_ref.end()) return it->second;
    for (int i = 0; i < s.dim; ++i) {
      VSimplex f = v->face(s, i);
      if (v->degeneracy(f, i) == s) {
        SimplexRef inner = resolve(f);
        SimplexRef out{word_insert(inner.word, i), inner.target};
        mat.to_ref.emplace(s, out);
        return out;
      }
    }
    throw std::runtime_error("materialize: unregistered nondegenerate simplex");
  };

  for (int d = 0; d <= bound; ++d) {
    for (const auto& s : v->simplices(d)) {
      if (mat.to_ref.count(s)) continue;
      if (v->is_degenerate(s)) continue;  // resolved lazily when referenced
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= d && d > 0; ++i) faces.push_back(resolve(v->face(s, i)));
      std::string name = "d" + std::to_string(d) + "_" +
                         std::to_string(mat.nondeg[static_cast<size_t>(d)].size());
      SimplexId id = obj->add_simplex(d, name, std::move(faces));
      mat.to_ref.emplace(s, nondeg_ref(id.dim, id.idx));
      mat.nondeg[static_cast<size_t>(d)].push_back(s);
    }
  }
  mat.sset = obj;
  return mat;
}

SSetPtr product(SSetPtr a, SSetPtr b) {
  auto va = std::make_shared<FiniteVirtual>(a);
  auto vb = std::make_shared<FiniteVirtual>(b);
  int bound = std::max(0, a->dim()) + std::max(0, b->dim());
  if (a->dim() < 0 || b->dim() < 0) return empty_sset();
  return materialize(std::make_shared<ProductVirtual>(va, vb), bound).sset;
}

SSetPtr opposite(SSetPtr a) {
  if (a->dim() < 0) return empty_sset();
  auto va = std::make_shared<FiniteVirtual>(a);
  return materialize(std::make_shared<OppositeVirtual>(va), a->dim()).sset;
}

SimplicialMap map_from_assignment(
    const Materialization& src, const Materialization& tgt,
    const std::function<VSimplex(const VSimplex&)>& on_handles) {
  SimplicialMap f;
  f.src = src.sset;
  f.tgt = tgt.sset;
  f.assign.resize(static_cast<size_t>(src.sset->dim_bound()) + 1);
  for (int d = 0; d <= src.sset->dim_bound(); ++d)
    for (int k = 0; k < src.sset->count(d); ++k)
      f.assign[static_cast<size_t>(d)].push_back(
          tgt.ref_of(on_handles(src.nondeg[static_cast<size_t>(d)][static_cast<size_t>(k)])));
  return f;
}

}  // namespace bkit
