// The three functors induced by epsilon = op * id: restriction (the twisted
// arrow construction), left Kan extension, and right Kan extension, together
// with the pushout-corner maps used in the left-fibration argument.
#pragma once

#include "bkit/colimit.hpp"
#include "bkit/lifting.hpp"
#include "bkit/virt.hpp"

namespace bkit {

// The simplicial map Delta^m -> Delta^n induced by a monotone f : [m] -> [n].
SimplicialMap delta_map(const DeltaMorphism& f);

// O~(X): n-simplices are the (2n+1)-simplices of X; operators come from
// evaluating epsilon on cofaces and codegeneracies, never from hand-coded
// index arithmetic.
class EdgewiseVirtual final : public VirtualSSet {
 public:
  explicit EdgewiseVirtual(VirtPtr base) : base_(std::move(base)) {}
  std::vector<VSimplex> simplices(int d) const override;
  VSimplex face(const VSimplex& s, int i) const override;
  VSimplex degeneracy(const VSimplex& s, int i) const override;
  std::vector<VSimplex> cofill(int d, const std::vector<VSimplex>& faces) const override;

  VSimplex wrap(const VSimplex& under) const;
  VSimplex unwrap(const VSimplex& s) const;
  VirtPtr base() const { return base_; }

  // Projections to the opposite and the identity factor, on handles.
  VSimplex to_op_factor(const VSimplex& s) const;   // a simplex of base (as X^op handle)
  VSimplex to_id_factor(const VSimplex& s) const;

 private:
  VirtPtr base_;
};

SSetPtr edgewise(SSetPtr x, int bound = -1);  // materialized; bound < 0: dim(x)

// ---- generic left Kan extension over the nondegenerate element category ----

struct LanPattern {
  std::function<SSetPtr(int)> piece;                          // P(Delta^d)
  std::function<SimplicialMap(const DeltaMorphism&)> on_map;  // P(f)
};

// Colimit of the pattern over the category of elements of the input,
// restricted to dimensions <= dim(input) (which is final); one piece per
// simplex, degenerate ones included.
struct LanResult {
  SSetPtr obj;
  SSetPtr input;
  std::map<SimplexRef, SimplicialMap> legs;
  const SimplicialMap& leg(const SimplexRef& r) const { return legs.at(r); }
  const SimplicialMap& leg(SimplexId id) const {
    return legs.at(nondeg_ref(id.dim, id.idx));
  }
};

LanResult lan_extend(SSetPtr x, const LanPattern& pattern);

// ---- epsilon_! ------------------------------------------------------------

struct ShriekResult {
  LanResult lan;
  SSetPtr obj;     // epsilon_!(X)
  SSetPtr x;
  SSetPtr x_op;            // materialized opposite of X
  SimplicialMap from_op;   // X^op -> obj
  SimplicialMap from_id;   // X   -> obj
};

ShriekResult epsilon_shriek(SSetPtr x);

// Functorial action on a map of finite simplicial sets.
SimplicialMap epsilon_shriek_map(const SimplicialMap& f, const ShriekResult& sx,
                                 const ShriekResult& sy);

SimplicialMap opposite_map(const SimplicialMap& f, SSetPtr x_op, SSetPtr y_op);

// Pushout-corner map e_!(X) u^{X^op + X} (Y^op + Y) -> e_!(Y) of a mono f.
struct CornerResult {
  SSetPtr p;               // the pushout
  SimplicialMap corner;    // P -> epsilon_!(Y), a monomorphism
  ShriekResult sx, sy;
};
CornerResult corner_map(const SimplicialMap& f);

// ---- epsilon_* ------------------------------------------------------------

// (e_* X)_n = Mor(O~(Delta^n), X), with operators by precomposition.
class EpsilonLowerStarVirtual final : public VirtualSSet {
 public:
  explicit EpsilonLowerStarVirtual(SSetPtr x);
  std::vector<VSimplex> simplices(int d) const override;
  VSimplex face(const VSimplex& s, int i) const override;
  VSimplex degeneracy(const VSimplex& s, int i) const override;

 private:
  const Materialization& twist_mat(int n) const;
  VSimplex reindex(const VSimplex& s, const DeltaMorphism& f) const;

  SSetPtr x_;
  LiftTarget xt_;
  mutable std::vector<std::shared_ptr<Materialization>> twists_;
};

struct AdjunctionReport {
  long mor_shriek = -1;  // |Mor(e_! X, Y)|
  long mor_into_edgewise = -1;  // |Mor(X, e^* Y)|
  long mor_from_edgewise = -1;  // |Mor(e^* X, Y)|
  long mor_into_lower_star = -1;  // |Mor(X, e_* Y)|
  bool left_ok() const { return mor_shriek == mor_into_edgewise; }
  bool right_ok() const { return mor_from_edgewise == mor_into_lower_star; }
};

AdjunctionReport adjunction_check(SSetPtr x, SSetPtr y);

}  // namespace bkit
