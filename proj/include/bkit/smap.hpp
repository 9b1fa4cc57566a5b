// Maps of finite simplicial sets: an image simplex for each nondegenerate
// source simplex, commuting with faces after normalization.
#pragma once

#include <optional>
#include <vector>

#include "bkit/sset.hpp"

namespace bkit {

struct SimplicialMap {
  SSetPtr src;
  SSetPtr tgt;
  // assign[d][k] = image of nondegenerate simplex (d, k), a ref of dimension d.
  std::vector<std::vector<SimplexRef>> assign;

  SimplexRef apply(const SimplexRef& r) const;
  void validate() const;  // faces commute, dimensions line up
  bool is_mono() const;
  bool is_iso() const;
  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

SimplicialMap identity_map(SSetPtr x);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
std::optional<SimplicialMap> inverse(const SimplicialMap& f);

// Structural equality of the underlying objects (names included).
bool same_sset(const SimplicialSet& a, const SimplicialSet& b);

// Backtracking search for an isomorphism; nullopt = exhaustion.
std::optional<SimplicialMap> iso_check(SSetPtr a, SSetPtr b);

// Isomorphism of arrows: isos (alpha, beta) with beta . f = g . alpha.
struct MapIso {
  SimplicialMap src_iso;
  SimplicialMap tgt_iso;
};
std::optional<MapIso> map_iso_check(const SimplicialMap& f, const SimplicialMap& g);

}  // namespace bkit
