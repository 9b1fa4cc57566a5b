#include "bkit/edgewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkit {

SimplicialMap delta_map(const DeltaMorphism& f) {
  SSetPtr src = standard_simplex(f.source);
  SSetPtr tgt = standard_simplex(f.target);
  SimplexRef top = nondeg_ref(f.target, 0);
  SimplicialMap out;
  out.src = src;
  out.tgt = tgt;
  out.assign.resize(static_cast<size_t>(f.source) + 1);
  for (int d = 0; d <= f.source; ++d)
    for (int k = 0; k < src->count(d); ++k) {
      // the monotone map of the cell composed with f, acting on the top cell
      std::vector<SimplexId> verts = src->vertex_tuple(nondeg_ref(d, k));
      DeltaMorphism mu;
      mu.source = d;
      mu.target = f.target;
      for (const auto& v : verts) mu.table.push_back(f(std::stoi(src->simplex(v).name)));
      out.assign[static_cast<size_t>(d)].push_back(tgt->act(mu, top));
    }
  return out;
}

// ---- EdgewiseVirtual -------------------------------------------------------

VSimplex EdgewiseVirtual::wrap(const VSimplex& under) const {
  if ((under.dim % 2) != 1) throw std::logic_error("edgewise: even underlying dim");
  VSimplex v = under;
  v.dim = (under.dim - 1) / 2;
  return v;
}

VSimplex EdgewiseVirtual::unwrap(const VSimplex& s) const {
  VSimplex v = s;
  v.dim = 2 * s.dim + 1;
  return v;
}

std::vector<VSimplex> EdgewiseVirtual::simplices(int d) const {
  std::vector<VSimplex> out;
  for (const auto& u : base_->simplices(2 * d + 1)) out.push_back(wrap(u));
  return out;
}

VSimplex EdgewiseVirtual::face(const VSimplex& s, int i) const {
  DeltaMorphism delta = DeltaMorphism::coface(s.dim, i);
  return wrap(base_->act(eval_endoword(epsilon_word(), delta), unwrap(s)));
}

VSimplex EdgewiseVirtual::degeneracy(const VSimplex& s, int i) const {
  DeltaMorphism sigma = DeltaMorphism::codegeneracy(s.dim, i);
  return wrap(base_->act(eval_endoword(epsilon_word(), sigma), unwrap(s)));
}

std::vector<VSimplex> EdgewiseVirtual::cofill(int d,
                                              const std::vector<VSimplex>& faces) const {
  return VirtualSSet::cofill(d, faces);
}

VSimplex EdgewiseVirtual::to_op_factor(const VSimplex& s) const {
  // ascending first-block inclusion [n] -> [2n+1]; the result is a simplex
  // of X regarded as an (X^op)-handle
  DeltaMorphism incl;
  incl.source = s.dim;
  incl.target = 2 * s.dim + 1;
  for (int j = 0; j <= s.dim; ++j) incl.table.push_back(j);
  return base_->act(incl, unwrap(s));
}

VSimplex EdgewiseVirtual::to_id_factor(const VSimplex& s) const {
  DeltaMorphism incl;
  incl.source = s.dim;
  incl.target = 2 * s.dim + 1;
  for (int j = 0; j <= s.dim; ++j) incl.table.push_back(s.dim + 1 + j);
  return base_->act(incl, unwrap(s));
}

SSetPtr edgewise(SSetPtr x, int bound) {
  if (x->dim() < 0) return empty_sset();
  if (bound < 0) bound = x->dim();
  auto ev = std::make_shared<EdgewiseVirtual>(std::make_shared<FiniteVirtual>(x));
  return materialize(ev, bound).sset;
}

// ---- lan_extend ------------------------------------------------------------

LanResult lan_extend(SSetPtr x, const LanPattern& pattern) {
  int top = std::max(0, x->dim());
  std::vector<SSetPtr> objects;
  std::vector<SimplexRef> element;  // object index -> the simplex it sits over
  std::map<SimplexRef, int> index;
  for (int d = 0; d <= top; ++d)
    for (const auto& r : x->all_refs(d)) {
      index.emplace(r, static_cast<int>(objects.size()));
      element.push_back(r);
      objects.push_back(pattern.piece(d));
    }
  std::vector<DiagramEdge> edges;
  for (size_t ob = 0; ob < objects.size(); ++ob) {
    const SimplexRef& z = element[ob];
    int d = z.dim();
    // coface arrows: piece(d_i z) -> piece(z)
    for (int i = 0; i <= d && d > 0; ++i) {
      DiagramEdge e;
      e.from = index.at(x->face(z, i));
      e.to = static_cast<int>(ob);
      e.map = pattern.on_map(DeltaMorphism::coface(d, i));
      e.map.src = objects[static_cast<size_t>(e.from)];
      e.map.tgt = objects[ob];
      edges.push_back(std::move(e));
    }
    // codegeneracy arrows: piece(z) -> piece(y) whenever z = s_i y
    for (int i = 0; i < d; ++i) {
      SimplexRef y = x->face(z, i);
      if (x->degenerate(y, i) != z) continue;
      DiagramEdge e;
      e.from = static_cast<int>(ob);
      e.to = index.at(y);
      e.map = pattern.on_map(DeltaMorphism::codegeneracy(d - 1, i));
      e.map.src = objects[ob];
      e.map.tgt = objects[static_cast<size_t>(e.to)];
      edges.push_back(std::move(e));
    }
  }
  auto col = colimit(objects, edges);
  LanResult out;
  out.obj = col.obj;
  out.input = x;
  for (size_t ob = 0; ob < objects.size(); ++ob)
    out.legs.emplace(element[ob], col.cocone[ob]);
  return out;
}

// ---- epsilon_! -------------------------------------------------------------

namespace {

DeltaMorphism block_inclusion(int d, bool second) {
  DeltaMorphism incl;
  incl.source = d;
  incl.target = 2 * d + 1;
  for (int j = 0; j <= d; ++j) incl.table.push_back(second ? d + 1 + j : j);
  return incl;
}

}  // namespace

ShriekResult epsilon_shriek(SSetPtr x) {
  ShriekResult out;
  out.x = x;
  LanPattern pat;
  pat.piece = [](int d) { return standard_simplex(2 * d + 1); };
  pat.on_map = [](const DeltaMorphism& f) {
    return delta_map(eval_endoword(epsilon_word(), f));
  };
  out.lan = lan_extend(x, pat);
  out.obj = out.lan.obj;

  // X -> e_!(X): the second-block diagonal of each piece.
  out.from_id.src = x;
  out.from_id.tgt = out.obj;
  out.from_id.assign.resize(static_cast<size_t>(x->dim_bound()) + 1);
  for (int d = 0; d <= x->dim_bound(); ++d)
    for (int k = 0; k < x->count(d); ++k) {
      SSetPtr piece = out.lan.leg({d, k}).src;
      SimplexRef cell = piece->act(block_inclusion(d, true), nondeg_ref(2 * d + 1, 0));
      out.from_id.assign[static_cast<size_t>(d)].push_back(out.lan.leg({d, k}).apply(cell));
    }
  out.from_id.validate();

  // X^op -> e_!(X): materialize the opposite and use the first block.
  auto fv = std::make_shared<FiniteVirtual>(x);
  auto opv = std::make_shared<OppositeVirtual>(fv);
  Materialization opmat = materialize(opv, std::max(0, x->dim()));
  out.x_op = opmat.sset;
  out.from_op.src = out.x_op;
  out.from_op.tgt = out.obj;
  out.from_op.assign.resize(static_cast<size_t>(out.x_op->dim_bound()) + 1);
  for (int d = 0; d <= out.x_op->dim_bound(); ++d)
    for (int k = 0; k < out.x_op->count(d); ++k) {
      SimplexRef orig = FiniteVirtual::decode(opmat.nondeg[static_cast<size_t>(d)]
                                                          [static_cast<size_t>(k)]);
      if (!orig.nondegenerate()) throw std::logic_error("opposite: degenerate core");
      SSetPtr piece = out.lan.leg(orig.target).src;
      SimplexRef cell = piece->act(block_inclusion(d, false), nondeg_ref(2 * d + 1, 0));
      out.from_op.assign[static_cast<size_t>(d)].push_back(
          out.lan.leg(orig.target).apply(cell));
    }
  out.from_op.validate();
  return out;
}

SimplicialMap epsilon_shriek_map(const SimplicialMap& f, const ShriekResult& sx,
                                 const ShriekResult& sy) {
  SimplicialMap out;
  out.src = sx.obj;
  out.tgt = sy.obj;
  out.assign.resize(static_cast<size_t>(sx.obj->dim_bound()) + 1);
  for (size_t d = 0; d < out.assign.size(); ++d)
    out.assign[d].assign(static_cast<size_t>(sx.obj->count(static_cast<int>(d))),
                         SimplexRef{{}, {-1, -1}});
  // Fill via representatives: the piece of x on the source side maps through
  // the piece of f(x) (an element of the same dimension) on the target side.
  for (int d = 0; d <= sx.x->dim_bound(); ++d)
    for (int k = 0; k < sx.x->count(d); ++k) {
      const SimplicialMap& legx = sx.lan.leg(SimplexId{d, k});
      SimplexRef img = f.assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
      const SimplicialMap& legy = sy.lan.leg(img);
      for (int pd = 0; pd <= legx.src->dim_bound(); ++pd)
        for (int pk = 0; pk < legx.src->count(pd); ++pk) {
          SimplexRef where = legx.assign[static_cast<size_t>(pd)][static_cast<size_t>(pk)];
          if (!where.nondegenerate()) continue;
          SimplexRef value = legy.apply(nondeg_ref(pd, pk));
          out.assign[static_cast<size_t>(where.target.dim)]
                    [static_cast<size_t>(where.target.idx)] = value;
        }
    }
  for (size_t d = 0; d < out.assign.size(); ++d)
    for (const auto& r : out.assign[d])
      if (r.target.dim < 0) throw std::logic_error("epsilon_shriek_map: unreached cell");
  out.validate();
  return out;
}

SimplicialMap opposite_map(const SimplicialMap& f, SSetPtr x_op, SSetPtr y_op) {
  // Relies on opposite materializations listing cores in the same order as
  // the originals (materialize preserves enumeration order).
  SimplicialMap out;
  out.src = x_op;
  out.tgt = y_op;
  out.assign.resize(static_cast<size_t>(x_op->dim_bound()) + 1);
  auto fv = std::make_shared<FiniteVirtual>(f.src);
  auto opv = std::make_shared<OppositeVirtual>(fv);
  Materialization xmat = materialize(opv, std::max(0, f.src->dim()));
  auto fvy = std::make_shared<FiniteVirtual>(f.tgt);
  auto opvy = std::make_shared<OppositeVirtual>(fvy);
  Materialization ymat = materialize(opvy, std::max(0, f.tgt->dim()));
  for (int d = 0; d <= x_op->dim_bound(); ++d)
    for (int k = 0; k < x_op->count(d); ++k) {
      SimplexRef orig = FiniteVirtual::decode(
          xmat.nondeg[static_cast<size_t>(d)][static_cast<size_t>(k)]);
      SimplexRef img = f.apply(orig);
      out.assign[static_cast<size_t>(d)].push_back(
          ymat.ref_of(FiniteVirtual::encode(img)));
    }
  out.validate();
  return out;
}

CornerResult corner_map(const SimplicialMap& f) {
  CornerResult out;
  out.sx = epsilon_shriek(f.src);
  out.sy = epsilon_shriek(f.tgt);
  SimplicialMap f_op = opposite_map(f, out.sx.x_op, out.sy.x_op);
  SimplicialMap shf = epsilon_shriek_map(f, out.sx, out.sy);

  // colimit of  e_!X <- X^op -> Y^op,  e_!X <- X -> Y
  std::vector<SSetPtr> objects = {out.sx.obj, out.sy.x_op, f.tgt, out.sx.x_op, f.src};
  std::vector<DiagramEdge> edges;
  edges.push_back({3, 0, out.sx.from_op});
  edges.push_back({3, 1, f_op});
  edges.push_back({4, 0, out.sx.from_id});
  edges.push_back({4, 2, f});
  auto col = colimit(objects, edges);
  out.p = col.obj;

  // corner: induced by e_!(f) on the first leg and the block inclusions of Y.
  SimplicialMap corner;
  corner.src = out.p;
  corner.tgt = out.sy.obj;
  corner.assign.resize(static_cast<size_t>(out.p->dim_bound()) + 1);
  for (size_t d = 0; d < corner.assign.size(); ++d)
    corner.assign[d].assign(static_cast<size_t>(out.p->count(static_cast<int>(d))),
                            SimplexRef{{}, {-1, -1}});
  auto install = [&](const SimplicialMap& leg, const SimplicialMap& send) {
    for (int d = 0; d <= leg.src->dim_bound(); ++d)
      for (int k = 0; k < leg.src->count(d); ++k) {
        SimplexRef where = leg.assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
        if (!where.nondegenerate()) continue;
        corner.assign[static_cast<size_t>(where.target.dim)]
                     [static_cast<size_t>(where.target.idx)] =
            send.assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
      }
  };
  install(col.cocone[0], shf);
  install(col.cocone[1], out.sy.from_op);
  install(col.cocone[2], out.sy.from_id);
  for (size_t d = 0; d < corner.assign.size(); ++d)
    for (const auto& r : corner.assign[d])
      if (r.target.dim < 0) throw std::logic_error("corner_map: unreached cell");
  corner.validate();
  out.corner = corner;
  return out;
}

// ---- epsilon_* -------------------------------------------------------------

EpsilonLowerStarVirtual::EpsilonLowerStarVirtual(SSetPtr x)
    : x_(std::move(x)), xt_(finite_target(x_)) {}

const Materialization& EpsilonLowerStarVirtual::twist_mat(int n) const {
  if (static_cast<int>(twists_.size()) <= n) twists_.resize(static_cast<size_t>(n) + 1);
  if (!twists_[static_cast<size_t>(n)]) {
    auto dv = std::make_shared<FiniteVirtual>(standard_simplex(n));
    auto ev = std::make_shared<EdgewiseVirtual>(dv);
    twists_[static_cast<size_t>(n)] =
        std::make_shared<Materialization>(materialize(ev, n));
  }
  return *twists_[static_cast<size_t>(n)];
}

std::vector<VSimplex> EpsilonLowerStarVirtual::simplices(int d) const {
  const Materialization& mat = twist_mat(d);
  std::vector<VSimplex> out;
  MapConstraints none;
  enumerate_maps(mat.sset, xt_, none, [&](const VAssignment& a) {
    VSimplex v;
    v.dim = d;
    for (const auto& lv : a.assign)
      for (const auto& img : lv) {
        v.key.push_back(-9);  // separator
        v.key.push_back(img.dim);
        for (int64_t x : img.key) v.key.push_back(x);
      }
    out.push_back(v);
    return true;
  });
  return out;
}

VSimplex EpsilonLowerStarVirtual::reindex(const VSimplex& s, const DeltaMorphism& f) const {
  // decode the assignment over twist_mat(f.target), precompose with O~(f)
  const Materialization& mfrom = twist_mat(f.target);
  const Materialization& mto = twist_mat(f.source);
  // decode: values in pool order
  std::vector<VSimplex> values;
  size_t pos = 0;
  const auto& key = s.key;
  while (pos < key.size()) {
    if (key[pos] != -9) throw std::logic_error("lower star: bad key");
    ++pos;
    VSimplex img;
    img.dim = static_cast<int>(key[pos++]);
    while (pos < key.size() && key[pos] != -9) img.key.push_back(key[pos++]);
    values.push_back(img);
  }
  // map each cell of twist(source) through delta_map(f) at the underlying level
  SimplicialMap dm = delta_map(f);
  VSimplex out;
  out.dim = f.source;
  size_t cell_counter = 0;
  (void)cell_counter;
  auto xv = std::make_shared<FiniteVirtual>(x_);
  for (int d = 0; d <= mto.sset->dim_bound(); ++d)
    for (int k = 0; k < mto.sset->count(d); ++k) {
      // underlying (2d+1)-simplex of Delta^{f.source}
      SimplexRef under = FiniteVirtual::decode(
          mto.nondeg[static_cast<size_t>(d)][static_cast<size_t>(k)]);
      SimplexRef pushed = dm.apply(under);
      VSimplex wrapped = FiniteVirtual::encode(pushed);
      wrapped.dim = (pushed.dim() - 1) / 2;  // edgewise handle
      SimplexRef cell = mfrom.ref_of(wrapped);
      // evaluate the recorded assignment at that cell
      VSimplex value = values.at(static_cast<size_t>(
          [&] {
            size_t idx = 0;
            for (int dd = 0; dd < cell.target.dim; ++dd)
              idx += static_cast<size_t>(mfrom.sset->count(dd));
            return idx + static_cast<size_t>(cell.target.idx);
          }()));
      for (auto it = cell.word.idx.rbegin(); it != cell.word.idx.rend(); ++it)
        value = xv->degeneracy(value, *it);
      out.key.push_back(-9);
      out.key.push_back(value.dim);
      for (int64_t xk : value.key) out.key.push_back(xk);
    }
  return out;
}

VSimplex EpsilonLowerStarVirtual::face(const VSimplex& s, int i) const {
  return reindex(s, DeltaMorphism::coface(s.dim, i));
}

VSimplex EpsilonLowerStarVirtual::degeneracy(const VSimplex& s, int i) const {
  return reindex(s, DeltaMorphism::codegeneracy(s.dim, i));
}

// ---- adjunction check --------------------------------------------------------

AdjunctionReport adjunction_check(SSetPtr x, SSetPtr y) {
  AdjunctionReport rep;
  auto sx = epsilon_shriek(x);
  rep.mor_shriek = count_maps(sx.obj, finite_target(y));

  LiftTarget ey;
  ey.v = std::make_shared<EdgewiseVirtual>(std::make_shared<FiniteVirtual>(y));
  ey.enumerate_bound = std::max(0, x->dim());
  rep.mor_into_edgewise = count_maps(x, ey);

  int xb = std::max(0, x->dim());
  auto exv = std::make_shared<EdgewiseVirtual>(std::make_shared<FiniteVirtual>(x));
  Materialization ex = materialize(exv, xb);
  for (const auto& s : exv->simplices(xb + 1))
    if (!exv->is_degenerate(s))
      throw std::runtime_error("adjunction_check: edgewise source not fully materialized");
  rep.mor_from_edgewise = count_maps(ex.sset, finite_target(y));

  LiftTarget ls;
  ls.v = std::make_shared<EpsilonLowerStarVirtual>(y);
  ls.enumerate_bound = std::max(0, x->dim());
  rep.mor_into_lower_star = count_maps(x, ls);
  return rep;
}

}  // namespace bkit
