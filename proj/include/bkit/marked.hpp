// Marked and marbled simplicial sets. Marked edge sets always contain the
// degenerate edges; blazed square sets always contain the constant squares,
// with any further squares stored explicitly as maps out of the standard
// square Delta^1 x Delta^1.
#pragma once

#include <map>
#include <set>

#include "bkit/smap.hpp"
#include "bkit/virt.hpp"

namespace bkit {

// The standard square with a fixed cell enumeration (dim-major order):
// vertices carry their product coordinates.
struct SquareObject {
  SSetPtr obj;
  // vertex ids by coordinates: corner[a][b] is the vertex over (a, b)
  SimplexId corner[2][2];
  // product coordinates of every cell's vertex tuple: [d][k] -> list of (a,b)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> coords;
  size_t cell_count = 0;
};
const SquareObject& square_object();

// Images of the square's nondegenerate cells, in the canonical cell order.
using SquareAssign = std::vector<SimplexRef>;

SquareAssign square_from_map(const SimplicialMap& q);
SquareAssign push_square(const SimplicialMap& f, const SquareAssign& q);
bool square_constant(const SimplicialSet& x, const SquareAssign& q);
// factors through one of the two projections to Delta^1
bool square_degenerate(const SimplicialSet& x, const SquareAssign& q);

struct MarkedSSet {
  SSetPtr s;
  std::set<int> marked;  // nondegenerate edge ids

  bool edge_marked(const SimplexRef& e) const {
    return !e.nondegenerate() || marked.count(e.target.idx) > 0;
  }
};

struct MarbledSSet {
  SSetPtr s;
  std::set<int> marked;
  std::vector<SquareAssign> blazes;  // explicit squares, sorted

  bool edge_marked(const SimplexRef& e) const {
    return !e.nondegenerate() || marked.count(e.target.idx) > 0;
  }
  bool is_blazed(const SquareAssign& q) const;
  // squares that do not factor through an edge or a vertex
  long nondegenerate_blaze_count() const;
  void sort_blazes();
};

MarbledSSet flat_marbled(SSetPtr s);                       // no marks, no blazes
MarbledSSet sharp_marked(SSetPtr s);                       // all edges marked

// Notation-l marking of a subcomplex of a simplex: the 01 edge is marked
// when present, nothing else.
MarkedSSet l_marking(const SimplicialMap& incl_into_simplex);

bool is_marked_map(const SimplicialMap& f, const MarkedSSet& src, const MarkedSSet& tgt);
bool is_marbled_map(const SimplicialMap& f, const MarbledSSet& src,
                    const MarbledSSet& tgt);

// ---- subobjects -----------------------------------------------------------------

using CellSet = std::set<std::pair<int, int>>;  // (dim, idx) in the ambient

struct Subobject {
  SSetPtr obj;
  SimplicialMap incl;  // obj -> ambient
  std::vector<std::vector<int>> fwd;  // ambient (dim, idx) -> obj idx or -1
};

// cells must be closed under faces and are kept in ambient order, so equal
// cell sets produce structurally equal objects.
Subobject subobject_of(SSetPtr ambient, const CellSet& cells);

CellSet close_under_faces(const SimplicialSet& ambient, CellSet cells);
CellSet full_cellset(const SimplicialSet& ambient);

// restriction of a marbled structure to a subobject
MarbledSSet restrict_marbled(const MarbledSSet& ambient, const Subobject& sub);

// nerve of a finite poset: cells are strict chains, named and sorted
// canonically, faces always nondegenerate.
struct PosetNerve {
  SSetPtr obj;
  std::vector<std::vector<std::vector<int>>> chain;  // [d][k] -> element list
  std::map<std::vector<int>, SimplexId> index;
};
PosetNerve poset_nerve(const std::vector<std::string>& names,
                       const std::function<bool(int, int)>& leq, int dim_cap = -1);

}  // namespace bkit
