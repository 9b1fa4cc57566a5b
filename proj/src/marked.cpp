#include "bkit/marked.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkit {

const SquareObject& square_object() {
  static SquareObject sq = [] {
    SquareObject out;
    auto d1 = standard_simplex(1);
    auto v1 = std::make_shared<FiniteVirtual>(d1);
    auto pv = std::make_shared<ProductVirtual>(v1, v1);
    Materialization mat = materialize(pv, 2);
    out.obj = mat.sset;
    out.coords.resize(static_cast<size_t>(out.obj->dim_bound()) + 1);
    for (int d = 0; d <= out.obj->dim_bound(); ++d) {
      out.coords[static_cast<size_t>(d)].resize(static_cast<size_t>(out.obj->count(d)));
      for (int k = 0; k < out.obj->count(d); ++k) {
        std::vector<std::pair<int, int>> tuple;
        for (const auto& vid : out.obj->vertex_tuple(nondeg_ref(d, k))) {
          VSimplex h = mat.nondeg[0][static_cast<size_t>(vid.idx)];
          auto [xa, xb] = ProductVirtual::unpair(h);
          tuple.push_back({FiniteVirtual::decode(xa).target.idx,
                           FiniteVirtual::decode(xb).target.idx});
        }
        out.coords[static_cast<size_t>(d)][static_cast<size_t>(k)] = tuple;
        if (d == 0) {
          auto [a, b] = tuple[0];
          out.corner[a][b] = {0, k};
        }
      }
    }
    out.cell_count = out.obj->total_nondeg();
    // sanity: 4 vertices, 5 edges, 2 triangles
    if (out.obj->count(0) != 4 || out.obj->count(1) != 5 || out.obj->count(2) != 2)
      throw std::logic_error("square object has unexpected shape");
    return out;
  }();
  return sq;
}

SquareAssign square_from_map(const SimplicialMap& q) {
  const SquareObject& sq = square_object();
  if (!same_sset(*q.src, *sq.obj)) throw std::invalid_argument("square_from_map: source");
  SquareAssign out;
  for (int d = 0; d <= sq.obj->dim_bound(); ++d)
    for (int k = 0; k < sq.obj->count(d); ++k)
      out.push_back(q.assign[static_cast<size_t>(d)][static_cast<size_t>(k)]);
  return out;
}

SquareAssign push_square(const SimplicialMap& f, const SquareAssign& q) {
  SquareAssign out;
  out.reserve(q.size());
  for (const auto& r : q) out.push_back(f.apply(r));
  return out;
}

namespace {

// cell order helper: flat index of (d, k) in a SquareAssign
size_t sq_slot(int d, int k) {
  const SquareObject& sq = square_object();
  size_t slot = 0;
  for (int dd = 0; dd < d; ++dd) slot += static_cast<size_t>(sq.obj->count(dd));
  return slot + static_cast<size_t>(k);
}

// the assignment of e . pr_axis for the edge value taken from q's own border
bool factors_through_projection(const SimplicialSet& x, const SquareAssign& q, int axis) {
  const SquareObject& sq = square_object();
  // the border edge along the axis from (0,0): axis 0 varies a, axis 1 varies b
  // build e: Delta^1 -> X from the two corners and the border edge
  SimplexRef e0 = q[sq_slot(0, sq.corner[0][0].idx)];
  SimplexRef e1 = axis == 0 ? q[sq_slot(0, sq.corner[1][0].idx)]
                            : q[sq_slot(0, sq.corner[0][1].idx)];
  // find the border edge cell: vertices (0,0) -> (1,0) or (0,0) -> (0,1)
  int border = -1;
  for (int k = 0; k < sq.obj->count(1); ++k) {
    const auto& t = sq.coords[1][static_cast<size_t>(k)];
    if (axis == 0 && t == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}}) border = k;
    if (axis == 1 && t == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}}) border = k;
  }
  if (border < 0) throw std::logic_error("square: missing border edge");
  SimplexRef eedge = q[sq_slot(1, border)];
  (void)e0;
  (void)e1;
  // expected value of each cell under e . pr_axis: act the edge value along
  // the cell's coordinate word
  for (int d = 0; d <= sq.obj->dim_bound(); ++d)
    for (int k = 0; k < sq.obj->count(d); ++k) {
      const auto& tuple = sq.coords[static_cast<size_t>(d)][static_cast<size_t>(k)];
      DeltaMorphism mu;
      mu.source = d;
      mu.target = 1;
      for (const auto& [a, b] : tuple) mu.table.push_back(axis == 0 ? a : b);
      SimplexRef expected = x.act(mu, eedge);
      if (q[sq_slot(d, k)] != expected) return false;
    }
  return true;
}

}  // namespace

bool square_constant(const SimplicialSet& x, const SquareAssign& q) {
  const SquareObject& sq = square_object();
  SimplexRef v = q[sq_slot(0, sq.corner[0][0].idx)];
  for (int d = 0; d <= sq.obj->dim_bound(); ++d)
    for (int k = 0; k < sq.obj->count(d); ++k) {
      SimplexRef expected = v;
      for (int i = 0; i < d; ++i) expected = x.degenerate(expected, 0);
      if (q[sq_slot(d, k)] != expected) return false;
    }
  return true;
}

bool square_degenerate(const SimplicialSet& x, const SquareAssign& q) {
  return factors_through_projection(x, q, 0) || factors_through_projection(x, q, 1);
}

bool MarbledSSet::is_blazed(const SquareAssign& q) const {
  // degenerate squares are implicitly blazed; only nondegenerate ones are
  // stored explicitly
  if (square_constant(*s, q) || square_degenerate(*s, q)) return true;
  return std::find(blazes.begin(), blazes.end(), q) != blazes.end();
}

long MarbledSSet::nondegenerate_blaze_count() const {
  long n = 0;
  for (const auto& q : blazes)
    if (!square_degenerate(*s, q)) ++n;
  return n;
}

void MarbledSSet::sort_blazes() {
  std::sort(blazes.begin(), blazes.end());
  blazes.erase(std::unique(blazes.begin(), blazes.end()), blazes.end());
}

MarbledSSet flat_marbled(SSetPtr s) { return {std::move(s), {}, {}}; }

MarbledSSet sharp_marked(SSetPtr s) {
  MarbledSSet out;
  out.s = std::move(s);
  for (int k = 0; k < out.s->count(1); ++k) out.marked.insert(k);
  return out;
}

MarkedSSet l_marking(const SimplicialMap& incl) {
  MarkedSSet out;
  out.s = incl.src;
  int e01 = incl.src->find(1, "01");
  if (e01 >= 0) out.marked.insert(e01);
  return out;
}

bool is_marked_map(const SimplicialMap& f, const MarkedSSet& src, const MarkedSSet& tgt) {
  for (int e : src.marked)
    if (!tgt.edge_marked(f.assign[1][static_cast<size_t>(e)])) return false;
  return true;
}

bool is_marbled_map(const SimplicialMap& f, const MarbledSSet& src,
                    const MarbledSSet& tgt) {
  for (int e : src.marked)
    if (!tgt.edge_marked(f.assign[1][static_cast<size_t>(e)])) return false;
  for (const auto& q : src.blazes)
    if (!tgt.is_blazed(push_square(f, q))) return false;
  return true;
}

// ---- subobjects ---------------------------------------------------------------------

CellSet close_under_faces(const SimplicialSet& ambient, CellSet cells) {
  std::vector<std::pair<int, int>> queue(cells.begin(), cells.end());
  while (!queue.empty()) {
    auto [d, k] = queue.back();
    queue.pop_back();
    if (d == 0) continue;
    for (const auto& f : ambient.simplex({d, k}).faces) {
      auto cell = std::make_pair(f.target.dim, f.target.idx);
      if (cells.insert(cell).second) queue.push_back(cell);
    }
  }
  return cells;
}

CellSet full_cellset(const SimplicialSet& ambient) {
  CellSet out;
  for (int d = 0; d <= ambient.dim_bound(); ++d)
    for (int k = 0; k < ambient.count(d); ++k) out.insert({d, k});
  return out;
}

Subobject subobject_of(SSetPtr ambient, const CellSet& cells) {
  Subobject out;
  auto obj = std::make_shared<SimplicialSet>();
  out.fwd.resize(static_cast<size_t>(ambient->dim_bound()) + 1);
  for (int d = 0; d <= ambient->dim_bound(); ++d)
    out.fwd[static_cast<size_t>(d)].assign(static_cast<size_t>(ambient->count(d)), -1);
  for (const auto& [d, k] : cells) {
    const auto& cell = ambient->simplex({d, k});
    std::vector<SimplexRef> faces;
    for (const auto& f : cell.faces) {
      int sub = out.fwd[static_cast<size_t>(f.target.dim)][static_cast<size_t>(f.target.idx)];
      if (sub < 0) throw std::invalid_argument("subobject: cells not face-closed");
      faces.push_back({f.word, {f.target.dim, sub}});
    }
    SimplexId id = obj->add_simplex(d, cell.name, std::move(faces));
    out.fwd[static_cast<size_t>(d)][static_cast<size_t>(k)] = id.idx;
  }
  out.obj = obj;
  out.incl.src = obj;
  out.incl.tgt = ambient;
  out.incl.assign.resize(static_cast<size_t>(obj->dim_bound()) + 1);
  for (int d = 0; d <= ambient->dim_bound(); ++d)
    for (int k = 0; k < ambient->count(d); ++k)
      if (out.fwd[static_cast<size_t>(d)][static_cast<size_t>(k)] >= 0) {
        auto& lv = out.incl.assign[static_cast<size_t>(d)];
        if (lv.size() <= static_cast<size_t>(out.fwd[static_cast<size_t>(d)][static_cast<size_t>(k)]))
          lv.resize(static_cast<size_t>(out.fwd[static_cast<size_t>(d)][static_cast<size_t>(k)]) + 1);
        lv[static_cast<size_t>(out.fwd[static_cast<size_t>(d)][static_cast<size_t>(k)])] =
            nondeg_ref(d, k);
      }
  out.incl.validate();
  return out;
}

MarbledSSet restrict_marbled(const MarbledSSet& ambient, const Subobject& sub) {
  MarbledSSet out;
  out.s = sub.obj;
  for (int e : ambient.marked) {
    if (static_cast<size_t>(e) >= sub.fwd[1].size()) continue;
    int se = sub.fwd[1][static_cast<size_t>(e)];
    if (se >= 0) out.marked.insert(se);
  }
  for (const auto& q : ambient.blazes) {
    SquareAssign r;
    bool inside = true;
    for (const auto& cell : q) {
      if (static_cast<size_t>(cell.target.dim) >= sub.fwd.size()) {
        inside = false;
        break;
      }
      int sk = sub.fwd[static_cast<size_t>(cell.target.dim)]
                      [static_cast<size_t>(cell.target.idx)];
      if (sk < 0) {
        inside = false;
        break;
      }
      r.push_back({cell.word, {cell.target.dim, sk}});
    }
    if (inside) out.blazes.push_back(std::move(r));
  }
  out.sort_blazes();
  return out;
}

PosetNerve poset_nerve(const std::vector<std::string>& names,
                       const std::function<bool(int, int)>& leq, int dim_cap) {
  int n = static_cast<int>(names.size());
  PosetNerve out;
  auto obj = std::make_shared<SimplicialSet>();
  out.chain.resize(1);
  // enumerate strict chains dimension by dimension; lexicographic order by
  // element indices is canonical because elements are listed canonically
  std::vector<std::vector<std::vector<int>>> chains;
  chains.push_back({});
  for (int a = 0; a < n; ++a) chains[0].push_back({a});
  int d = 0;
  while (!chains[static_cast<size_t>(d)].empty() && (dim_cap < 0 || d < dim_cap)) {
    chains.push_back({});
    for (const auto& c : chains[static_cast<size_t>(d)])
      for (int next = 0; next < n; ++next) {
        if (next == c.back() || !leq(c.back(), next)) continue;
        auto c2 = c;
        c2.push_back(next);
        chains[static_cast<size_t>(d) + 1].push_back(c2);
      }
    ++d;
  }
  out.chain.assign(chains.size(), {});
  for (size_t dd = 0; dd < chains.size(); ++dd) {
    std::sort(chains[dd].begin(), chains[dd].end());
    for (const auto& c : chains[dd]) {
      std::string name;
      for (int e : c) {
        if (!name.empty()) name += ">";
        name += names[static_cast<size_t>(e)];
      }
      std::vector<SimplexRef> faces;
      for (size_t i = 0; i < c.size() && c.size() > 1; ++i) {
        std::vector<int> fc;
        for (size_t k = 0; k < c.size(); ++k)
          if (k != i) fc.push_back(c[k]);
        faces.push_back({{}, out.index.at(fc)});
      }
      SimplexId id = obj->add_simplex(static_cast<int>(dd), name, std::move(faces));
      out.index.emplace(c, id);
      out.chain[dd].push_back(c);
    }
  }
  out.obj = obj;
  return out;
}

}  // namespace bkit
