// Finite simplicial sets in Eilenberg-Zilber normal form: nondegenerate
// generators per dimension plus face tables. Every simplex is a degeneracy
// word applied to a unique nondegenerate target.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bkit/delta.hpp"

namespace bkit {

// Strictly decreasing sequence s_{i1} ... s_{ik}, i1 > ... > ik, applied
// right-to-left to a simplex.
struct DegeneracyWord {
  std::vector<int> idx;

  size_t length() const { return idx.size(); }
  bool empty() const { return idx.empty(); }
  friend bool operator==(const DegeneracyWord&, const DegeneracyWord&) = default;
  friend auto operator<=>(const DegeneracyWord&, const DegeneracyWord&) = default;
};

struct SimplexId {
  int dim = -1;
  int idx = -1;
  friend bool operator==(const SimplexId&, const SimplexId&) = default;
  friend auto operator<=>(const SimplexId&, const SimplexId&) = default;
};

// A (possibly degenerate) simplex: word applied to a nondegenerate target.
struct SimplexRef {
  DegeneracyWord word;
  SimplexId target;

  int dim() const { return target.dim + static_cast<int>(word.length()); }
  bool nondegenerate() const { return word.empty(); }
  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

inline SimplexRef nondeg_ref(int dim, int idx) { return SimplexRef{{}, {dim, idx}}; }

struct NondegSimplex {
  std::string name;
  std::vector<SimplexRef> faces;  // size dim+1 for dim > 0, empty for dim 0
  friend bool operator==(const NondegSimplex&, const NondegSimplex&) = default;
};

class SimplicialSet {
 public:
  // Number of dimensions with allocated (possibly empty) simplex lists.
  int dim_bound() const { return static_cast<int>(dims_.size()) - 1; }
  // Largest dimension carrying a nondegenerate simplex (-1 when empty).
  int dim() const;

  int count(int d) const;
  size_t total_nondeg() const;
  const NondegSimplex& simplex(SimplexId id) const;
  const std::vector<NondegSimplex>& level(int d) const;

  SimplexId add_simplex(int d, std::string name, std::vector<SimplexRef> faces);
  int find(int d, const std::string& name) const;  // -1 when absent

  // Face and degeneracy operators on arbitrary simplices, in normal form.
  SimplexRef face(const SimplexRef& r, int i) const;
  SimplexRef degenerate(const SimplexRef& r, int i) const;
  // Contravariant action X(f) : X_n -> X_m for monotone f : [m] -> [n].
  SimplexRef act(const DeltaMorphism& f, const SimplexRef& r) const;

  // All simplices of dimension d, degenerate ones included.
  std::vector<SimplexRef> all_refs(int d) const;
  // Vertex tuple of a simplex (its 0-dimensional corners in order).
  std::vector<SimplexId> vertex_tuple(const SimplexRef& r) const;

  void validate() const;

  friend bool operator==(const SimplicialSet&, const SimplicialSet&) = default;

 private:
  std::vector<std::vector<NondegSimplex>> dims_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

// Word-level degeneracy insertion: normal form of s_i * (word).
DegeneracyWord word_insert(const DegeneracyWord& w, int i);

// ---- Standard objects ----------------------------------------------------

// Delta^n with simplices named by vertex words ("0", "02", "013", ...).
SSetPtr standard_simplex(int n);
SSetPtr empty_sset();

struct SimplicialMap;  // defined in smap.hpp

// Subcomplex of Delta^n generated by faces (each a sorted vertex subset);
// returns the inclusion into standard_simplex(n).
SimplicialMap simplex_subcomplex(int n, const std::vector<std::vector<int>>& faces);

SimplicialMap boundary_inclusion(int n);                       // dDelta^n
SimplicialMap horn_inclusion(int n, const std::vector<int>& S);  // Lambda^n_S
SimplicialMap spine_inclusion_on(const std::vector<int>& K, int n);
SimplicialMap spine_inclusion(int n);  // I^n in Delta^n
SimplicialMap j_complex_inclusion(int n);

std::string vertex_word_name(const std::vector<int>& verts);

}  // namespace bkit
