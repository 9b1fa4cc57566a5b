// Colimits of finite simplicial sets: dimensionwise union-find quotient of a
// disjoint union, followed by renormalization of simplices that became
// degenerate. Pushouts, coproducts and category-of-elements gluings all go
// through the same engine.
#pragma once

#include <vector>

#include "bkit/smap.hpp"
#include "bkit/sset.hpp"

namespace bkit {

class UnionFind {
 public:
  explicit UnionFind(size_t n = 0) : parent_(n) {
    for (size_t k = 0; k < n; ++k) parent_[k] = k;
  }
  size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(size_t a, size_t b) { parent_[find(a)] = find(b); }
  size_t size() const { return parent_.size(); }

 private:
  std::vector<size_t> parent_;
};

struct DiagramEdge {
  int from = -1;  // indices into the object list
  int to = -1;
  SimplicialMap map;
};

struct ColimitResult {
  SSetPtr obj;
  std::vector<SimplicialMap> cocone;  // one leg per diagram object
};

ColimitResult colimit(const std::vector<SSetPtr>& objects,
                      const std::vector<DiagramEdge>& edges);

struct PushoutResult {
  SSetPtr obj;
  SimplicialMap from_x;  // X -> P
  SimplicialMap from_y;  // Y -> P
};

// Pushout of X <-f- A -g-> Y.
PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g);

// The unique factorization of a cocone (u, v) through a computed pushout;
// throws when the cocone does not commute.
SimplicialMap pushout_factor(const PushoutResult& p, const SimplicialMap& f,
                             const SimplicialMap& g, const SimplicialMap& u,
                             const SimplicialMap& v);

// Is (u, v) a pushout cocone over X <-f- A -g-> Y? Decided by comparing with
// the computed pushout: the induced comparison map must be an isomorphism.
bool is_pushout_square(const SimplicialMap& f, const SimplicialMap& g,
                       const SimplicialMap& u, const SimplicialMap& v);

SSetPtr disjoint_union(const std::vector<SSetPtr>& objects);

}  // namespace bkit
