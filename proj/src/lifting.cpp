#include "bkit/lifting.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkit {

VSimplex VAssignment::apply(const SimplexRef& r) const {
  VSimplex v = assign.at(static_cast<size_t>(r.target.dim))
                   .at(static_cast<size_t>(r.target.idx));
  for (auto it = r.word.idx.rbegin(); it != r.word.idx.rend(); ++it)
    v = tgt->degeneracy(v, *it);
  return v;
}

LiftTarget finite_target(SSetPtr s) {
  LiftTarget t;
  t.v = std::make_shared<FiniteVirtual>(s);
  t.enumerate_bound = std::max(0, s->dim());
  return t;
}

const std::vector<VSimplex>& LiftTarget::pool(int d) const {
  auto it = cache->pool.find(d);
  if (it == cache->pool.end()) it = cache->pool.emplace(d, v->simplices(d)).first;
  return it->second;
}

namespace {

size_t faces_key(const std::vector<VSimplex>& faces) {
  VSimplexHash h;
  size_t acc = faces.size();
  for (const auto& f : faces) acc = acc * 1000000007u + h(f);
  return acc;
}

}  // namespace

std::vector<VSimplex> LiftTarget::candidates(int d, const std::vector<VSimplex>& faces) const {
  if (d == 0) return pool(0);
  if (d > enumerate_bound) return v->cofill(d, faces);
  auto& dim_index = cache->index[d];
  if (dim_index.empty()) {
    for (const auto& c : pool(d)) {
      std::vector<VSimplex> fs;
      for (int i = 0; i <= d; ++i) fs.push_back(v->face(c, i));
      dim_index[faces_key(fs)].push_back(c);
    }
    dim_index[static_cast<size_t>(-1)];  // sentinel: built
  }
  auto it = dim_index.find(faces_key(faces));
  if (it == dim_index.end()) return {};
  // Hash collisions are possible in principle; verify faces exactly.
  std::vector<VSimplex> out;
  for (const auto& c : it->second) {
    bool ok = true;
    for (int i = 0; i <= d && ok; ++i)
      if (v->face(c, i) != faces[static_cast<size_t>(i)]) ok = false;
    if (ok) out.push_back(c);
  }
  return out;
}

namespace {

struct Searcher {
  SSetPtr src;
  const LiftTarget& target;
  const MapConstraints& cons;
  const std::function<bool(const VAssignment&)>& emit;

  std::vector<SimplexId> order;
  VAssignment current;
  // pins closed under taking nondegenerate faces
  std::vector<std::vector<std::optional<VSimplex>>> pin;
  long emitted = 0;
  bool stop = false;

  Searcher(SSetPtr s, const LiftTarget& t, const MapConstraints& c,
           const std::function<bool(const VAssignment&)>& e)
      : src(std::move(s)), target(t), cons(c), emit(e) {
    int top = src->dim_bound();
    current.src = src;
    current.tgt = target.v;
    current.assign.resize(static_cast<size_t>(top) + 1);
    pin.resize(static_cast<size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
      size_t n = static_cast<size_t>(src->count(d));
      current.assign[static_cast<size_t>(d)].resize(n);
      pin[static_cast<size_t>(d)].resize(n);
    }
  }

  bool close_pins() {
    std::vector<std::pair<SimplexId, VSimplex>> queue = cons.pinned;
    while (!queue.empty()) {
      auto [id, v] = queue.back();
      queue.pop_back();
      if (v.dim != id.dim) return false;
      auto& cell = pin[static_cast<size_t>(id.dim)][static_cast<size_t>(id.idx)];
      if (cell.has_value()) {
        if (*cell != v) return false;  // conflicting pins: no maps
        continue;
      }
      cell = v;
      if (id.dim > 0) {
        const auto& faces = src->simplex(id).faces;
        for (int i = 0; i <= id.dim; ++i) {
          const SimplexRef& f = faces[static_cast<size_t>(i)];
          if (f.nondegenerate())
            queue.push_back({f.target, target.v->face(v, i)});
        }
      }
    }
    return true;
  }

  // Static order: cells become eligible once all face cores are placed;
  // prefer pinned cells, then high dimension, then vertices adjacent to
  // placed edges so that edge constraints bite early.
  void compute_order() {
    int top = src->dim_bound();
    std::vector<std::vector<char>> placed(static_cast<size_t>(top) + 1);
    for (int d = 0; d <= top; ++d)
      placed[static_cast<size_t>(d)].assign(static_cast<size_t>(src->count(d)), 0);
    size_t total = src->total_nondeg();
    auto is_placed = [&](SimplexId id) {
      return placed[static_cast<size_t>(id.dim)][static_cast<size_t>(id.idx)] != 0;
    };
    auto eligible = [&](int d, int k) {
      if (placed[static_cast<size_t>(d)][static_cast<size_t>(k)]) return false;
      if (d == 0) return true;
      for (const auto& f : src->simplex({d, k}).faces)
        if (!is_placed(f.target)) return false;
      return true;
    };
    while (order.size() < total) {
      int bd = -1, bk = -1;
      long bscore = -1;
      for (int d = top; d >= 0; --d)
        for (int k = 0; k < src->count(d); ++k) {
          if (!eligible(d, k)) continue;
          long score = 1000L * d;
          if (pin[static_cast<size_t>(d)][static_cast<size_t>(k)].has_value())
            score += 1000000;
          if (d == 0) {
            for (int kk = 0; kk < src->count(1); ++kk) {
              const auto& fs = src->simplex({1, kk}).faces;
              bool touches = false, other_placed = false;
              for (const auto& f : fs) {
                if (!f.nondegenerate()) continue;
                if (f.target == SimplexId{0, k}) touches = true;
                else if (is_placed(f.target)) other_placed = true;
              }
              if (touches && other_placed) score += 10;
            }
          }
          if (score > bscore) {
            bscore = score;
            bd = d;
            bk = k;
          }
        }
      placed[static_cast<size_t>(bd)][static_cast<size_t>(bk)] = 1;
      order.push_back({bd, bk});
    }
  }

  bool mark_ok(SimplexId id, const VSimplex& img) const {
    if (!cons.src_edge_marked || id.dim != 1) return true;
    if (!cons.src_edge_marked(id)) return true;
    if (target.v->is_degenerate(img)) return true;
    return cons.tgt_edge_marked && cons.tgt_edge_marked(img);
  }

  bool fiber_ok(SimplexId id, const VSimplex& img) const {
    if (!cons.proj) return true;
    return (*cons.proj)(img) == cons.required->apply(nondeg_ref(id.dim, id.idx));
  }

  bool blazes_ok() const {
    if (!cons.src_blazes || !cons.tgt_blazes) return true;
    for (const auto& square : *cons.src_blazes) {
      std::vector<VSimplex> image;
      for (const auto& cell : square) image.push_back(current.apply(cell));
      if (!cons.tgt_blazes->is_blazed(image)) return false;
    }
    return true;
  }

  void run(size_t pos) {
    if (stop) return;
    if (pos == order.size()) {
      if (!blazes_ok()) return;
      ++emitted;
      if (!emit(current)) stop = true;
      return;
    }
    SimplexId id = order[pos];
    const auto& pinned = pin[static_cast<size_t>(id.dim)][static_cast<size_t>(id.idx)];
    std::vector<VSimplex> cands;
    if (id.dim == 0) {
      if (pinned) cands = {*pinned};
      else cands = target.pool(0);
    } else {
      std::vector<VSimplex> faces;
      for (const auto& f : src->simplex(id).faces) faces.push_back(current.apply(f));
      if (pinned) {
        bool ok = true;
        for (int i = 0; i <= id.dim && ok; ++i)
          if (target.v->face(*pinned, i) != faces[static_cast<size_t>(i)]) ok = false;
        if (!ok) return;
        cands = {*pinned};
      } else {
        cands = target.candidates(id.dim, faces);
      }
    }
    for (const auto& c : cands) {
      if (c.dim != id.dim) continue;
      if (!fiber_ok(id, c)) continue;
      if (!mark_ok(id, c)) continue;
      current.assign[static_cast<size_t>(id.dim)][static_cast<size_t>(id.idx)] = c;
      run(pos + 1);
      if (stop) return;
    }
  }
};

}  // namespace

long enumerate_maps(SSetPtr src, const LiftTarget& target,
                    const MapConstraints& constraints,
                    const std::function<bool(const VAssignment&)>& emit) {
  Searcher s(src, target, constraints, emit);
  if (!s.close_pins()) return 0;
  s.compute_order();
  s.run(0);
  return s.emitted;
}

long count_maps(SSetPtr src, const LiftTarget& target) {
  MapConstraints none;
  return enumerate_maps(src, target, none, [](const VAssignment&) { return true; });
}

std::optional<VAssignment> has_lift(const LiftingProblem& prob) {
  MapConstraints cons;
  for (int d = 0; d <= prob.incl.src->dim_bound(); ++d)
    for (int k = 0; k < prob.incl.src->count(d); ++k) {
      const SimplexRef& img =
          prob.incl.assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
      if (!img.nondegenerate())
        throw std::invalid_argument("has_lift: inclusion must map cells to cells");
      cons.pinned.push_back(
          {img.target, prob.top.assign[static_cast<size_t>(d)][static_cast<size_t>(k)]});
    }
  cons.proj = &prob.proj;
  cons.required = &prob.bottom;
  cons.src_edge_marked = prob.src_edge_marked;
  cons.tgt_edge_marked = prob.tgt_edge_marked;
  cons.src_blazes = prob.src_blazes;
  cons.tgt_blazes = prob.tgt_blazes;
  std::optional<VAssignment> found;
  enumerate_maps(prob.incl.tgt, prob.total, cons, [&](const VAssignment& a) {
    found = a;
    return false;
  });
  return found;
}

VirtualArrow arrow_to_point(const LiftTarget& total, int coskeletal_hint) {
  VirtualArrow p;
  p.total = total;
  p.base = finite_target(standard_simplex(0));
  auto pt = p.base.v;
  p.proj = [pt](const VSimplex& s) {
    VSimplex v = FiniteVirtual::encode(nondeg_ref(0, 0));
    for (int i = 0; i < s.dim; ++i) v = pt->degeneracy(v, 0);
    return v;
  };
  p.coskeletal_hint_total = coskeletal_hint;
  p.coskeletal_hint_base = 0;
  return p;
}

VirtualArrow arrow_between(const LiftTarget& total, const LiftTarget& base,
                           VirtualMapFn proj, int cosk_total, int cosk_base) {
  VirtualArrow p;
  p.total = total;
  p.base = base;
  p.proj = std::move(proj);
  p.coskeletal_hint_total = cosk_total;
  p.coskeletal_hint_base = cosk_base;
  return p;
}

namespace {

struct HornShape {
  int n;
  std::vector<int> S;
  bool is_boundary = false;
};

std::vector<HornShape> shapes_for(FibrationKind kind, int bound) {
  std::vector<HornShape> out;
  for (int n = (kind == FibrationKind::Trivial ? 0 : 1); n <= bound; ++n) {
    switch (kind) {
      case FibrationKind::Inner:
        for (int k = 1; k < n; ++k) out.push_back({n, {k}, false});
        break;
      case FibrationKind::Left:
        for (int k = 0; k < n; ++k) out.push_back({n, {k}, false});
        break;
      case FibrationKind::Trivial:
        out.push_back({n, {}, true});
        break;
    }
  }
  return out;
}

// Runs all lifting problems for one horn/sphere shape; returns false and
// fills the witness when some problem has no solution.
bool sweep_shape(const VirtualArrow& p, const SimplicialMap& incl,
                 const std::optional<std::pair<SimplexId, VSimplex>>& top_pin,
                 FibrationReport& rep, const std::string& label) {
  SSetPtr horn = incl.src;
  bool ok = true;
  MapConstraints tcons;
  if (top_pin) tcons.pinned.push_back(*top_pin);
  enumerate_maps(horn, p.total, tcons, [&](const VAssignment& top) {
    MapConstraints bcons;
    for (int d = 0; d <= horn->dim_bound(); ++d)
      for (int k = 0; k < horn->count(d); ++k) {
        const SimplexRef& img =
            incl.assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
        bcons.pinned.push_back(
            {img.target,
             p.proj(top.assign[static_cast<size_t>(d)][static_cast<size_t>(k)])});
      }
    enumerate_maps(incl.tgt, p.base, bcons, [&](const VAssignment& bottom) {
      LiftingProblem prob;
      prob.incl = incl;
      prob.total = p.total;
      prob.base = p.base;
      prob.proj = p.proj;
      prob.top = top;
      prob.bottom = bottom;
      ++rep.problems_checked;
      if (!has_lift(prob)) {
        ok = false;
        rep.witness = label + " problem without lift";
        return false;
      }
      return true;
    });
    return ok;
  });
  return ok;
}

}  // namespace

FibrationReport check_fibration(const VirtualArrow& p, FibrationKind kind, int bound) {
  FibrationReport rep;
  rep.kind = kind;
  rep.bound = bound;
  rep.pass = true;
  for (const auto& shape : shapes_for(kind, bound)) {
    SimplicialMap incl = shape.is_boundary ? boundary_inclusion(shape.n)
                                           : horn_inclusion(shape.n, shape.S);
    std::string label = shape.is_boundary
                            ? "dDelta^" + std::to_string(shape.n)
                            : "Lambda^" + std::to_string(shape.n) + "_" +
                                  std::to_string(shape.S[0]);
    if (!sweep_shape(p, incl, std::nullopt, rep, label)) {
      rep.pass = false;
      break;
    }
  }
  int cosk = std::max(p.coskeletal_hint_total, p.coskeletal_hint_base);
  rep.definitive = (p.coskeletal_hint_total >= 0 && p.coskeletal_hint_base >= 0 &&
                    cosk + 1 <= bound);
  return rep;
}

FibrationReport check_cocartesian_edge(const VirtualArrow& p, const VSimplex& e,
                                       int bound) {
  FibrationReport rep;
  rep.kind = FibrationKind::Left;
  rep.bound = bound;
  rep.pass = true;
  for (int n = 2; n <= bound && rep.pass; ++n) {
    SimplicialMap incl = horn_inclusion(n, {0});
    int edge01 = incl.src->find(1, "01");
    if (edge01 < 0) throw std::logic_error("horn without its initial edge");
    std::pair<SimplexId, VSimplex> pin{SimplexId{1, edge01}, e};
    if (!sweep_shape(p, incl, pin, rep,
                     "initial-edge Lambda^" + std::to_string(n) + "_0"))
      rep.pass = false;
  }
  return rep;
}

}  // namespace bkit
