// The functor from marked to marbled simplicial sets built on the twisted
// arrow poset of triples, the fibrewise effective Burnside construction, and
// the instance checkers for its fibration properties.
#pragma once

#include "bkit/burnside.hpp"
#include "bkit/edgewise.hpp"
#include "bkit/marked.hpp"

namespace bkit {

// F(Delta^n): nerve of the poset of triples ((i,j), h), 0 <= i <= j <= h <= n,
// with (i,j) shrinking and h growing. Marked edges keep the interval fixed;
// explicit blazes are the constant-h pattern squares.
struct FDelta {
  int n = -1;
  PosetNerve nerve;
  std::vector<std::array<int, 3>> triple;  // poset element -> (i, j, h)
  MarbledSSet marbled;
  int elem(int i, int j, int h) const;
};
const FDelta& f_delta(int n);

// F applied to the simplicial map Delta^m -> Delta^n of a monotone map.
SimplicialMap f_on_delta_map(const DeltaMorphism& f);

// F of a subcomplex of Delta^n, as a marbled subobject of F(Delta^n).
struct FSub {
  MarbledSSet obj;
  Subobject sub;  // into f_delta(n)
};
FSub f_of_subcomplex(int n, const std::vector<std::vector<int>>& faces);

// F of an arbitrary marked simplicial set, by the colimit presentation.
struct FResult {
  MarbledSSet obj;
  LanResult lan;
  SimplicialMap to_input;  // the natural map F(K) -> K (underlying)
};
FResult f_marked(const MarkedSSet& k);

// ---- marbled fibrations -------------------------------------------------------

// X^{#b} -> S^{#b} for a cocartesian fibration whose fibers admit pullbacks
// and whose pushforwards preserve them; construction refuses otherwise.
struct MarbledFibration {
  CatValuedFunctor g;  // covariant
  GrothendieckResult gr;
  int bound = 3;
  LiftTarget total;  // nerve of the total category
  LiftTarget base;   // nerve of the base
  VirtualMapFn proj;
  std::function<bool(const VSimplex&)> edge_marked;  // cocartesian edges
  SquareImageOracle blazes;                          // fiberwise pullbacks
  std::function<bool(const std::vector<VSimplex>&)> base_blazes;  // constants
};

MarbledFibration make_marbled_fibration(const CatValuedFunctor& g, int bound);

// The default test family: constructions over small bases with
// meet-semilattice fibers.
std::vector<MarbledFibration> marbled_fibration_family(int bound);

// Necessary-condition tester for marbled trivial cofibrations.
struct MarbledLiftReport {
  bool pass = false;
  long problems_checked = 0;
  std::string witness;
};
MarbledLiftReport marbled_trivial_cofib_test(const SimplicialMap& incl,
                                             const MarbledSSet& src,
                                             const MarbledSSet& tgt,
                                             const std::vector<MarbledFibration>& family);

// ---- the fibrewise Burnside construction -----------------------------------------

// Handles pair a base simplex with a marbled map out of F(Delta^n).
class AeffFibrewise final : public VirtualSSet {
 public:
  AeffFibrewise(std::shared_ptr<const MarbledFibration> p);
  std::vector<VSimplex> simplices(int d) const override;
  VSimplex face(const VSimplex& s, int i) const override;
  VSimplex degeneracy(const VSimplex& s, int i) const override;

  VSimplex base_of(const VSimplex& s) const;
  bool edge_is_marked(const VSimplex& e) const;
  // value of the underlying assignment at a cell of F(Delta^n)
  VSimplex value_at(const VSimplex& s, const SimplexRef& cell) const;

  static VSimplex pack(const VSimplex& sigma, const std::vector<VSimplex>& values);
  std::pair<VSimplex, std::vector<VSimplex>> unpack(const VSimplex& s) const;

 private:
  VSimplex reindex(const VSimplex& s, const DeltaMorphism& f) const;
  std::shared_ptr<const MarbledFibration> p_;
};

struct AeffFibrewiseResult {
  std::shared_ptr<const MarbledFibration> fib;
  std::shared_ptr<const AeffFibrewise> v;
  LiftTarget total;
  VirtualMapFn rho;
};
AeffFibrewiseResult aeff_fibrewise(const MarbledFibration& p, int enumerate_bound);

// Representability spot-check: marked maps K -> A^eff_S(X) over sigma biject
// with marbled maps F(K) -> X^{#b} over the base.
struct RepresentabilityReport {
  bool pass = false;
  long lhs = -1, rhs = -1;
  std::string detail;
};
RepresentabilityReport check_representability(const AeffFibrewiseResult& a,
                                              const SimplicialMap& k_incl_into_simplex,
                                              int n);

// fiber of rho over a base vertex, compared with A^eff of the fiber
FibrationReport fiber_comparison(const AeffFibrewiseResult& a, int base_object,
                                 int bound);

struct Thm310Report {
  bool inner = false;              // rho is an inner fibration up to bound
  bool marked_lifts = false;       // marked lifts over every base edge
  bool marked_are_cocartesian = false;
  bool cocartesian_are_marked = false;
  long edges_checked = 0;
  std::string failure;
  bool pass() const {
    return inner && marked_lifts && marked_are_cocartesian && cocartesian_are_marked;
  }
};
Thm310Report verify_thm310(const AeffFibrewiseResult& a, int bound);

}  // namespace bkit
