// Adequate triples and the effective Burnside construction: n-simplices are
// functors on the opposite twisted arrow poset of [n], with every interval
// square an ambigressive pullback. Includes the instance checker for the
// unfurling theorem and the dual fibration constructions.
#pragma once

#include "bkit/cat.hpp"
#include "bkit/lifting.hpp"

namespace bkit {

struct AdequateTriple {
  CatPtr c;
  std::vector<char> ingressive;  // per morphism
  std::vector<char> egressive;

  bool ing(int m) const { return ingressive[static_cast<size_t>(m)] != 0; }
  bool egr(int m) const { return egressive[static_cast<size_t>(m)] != 0; }
  // identities and isomorphisms present, closed under composition
  void validate_closure() const;
};

AdequateTriple full_triple(CatPtr c);

// square with corner P: top: P -> A, left: P -> B, right: A -> C, bottom: B -> C
bool commutes(const FiniteCategory& c, int top, int left, int right, int bottom);
bool is_pullback(const FiniteCategory& c, int top, int left, int right, int bottom);

struct AmbigressiveCompletion {
  int apex;  // P
  int top;   // ingressive P -> A
  int left;  // egressive  P -> B
};

// Cached pullback verdicts and completion tables for one triple.
class PullbackCache {
 public:
  explicit PullbackCache(const AdequateTriple& t) : t_(&t) {}
  bool ambigressive_pullback(int top, int left, int right, int bottom) const;
  // completions of the cospan (bottom: ingressive B -> C, right: egressive A -> C)
  const std::vector<AmbigressiveCompletion>& completions(int bottom_ing,
                                                         int right_egr) const;

 private:
  const AdequateTriple* t_;
  mutable std::map<std::tuple<int, int, int, int>, bool> verdict_;
  mutable std::map<std::pair<int, int>, std::vector<AmbigressiveCompletion>> compl_;
};

struct AdequacyReport {
  bool ok = false;
  std::string failure;
  // witness per (ingressive, egressive) cospan into a common target
  std::vector<std::tuple<int, int, AmbigressiveCompletion>> witnesses;
};
AdequacyReport check_adequate(const AdequateTriple& t);

// ---- the effective Burnside object -----------------------------------------

// interval pairs (i <= j) and arrow quads (i <= k <= l <= j) for one n
struct GridShape {
  int n;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_index;
  std::vector<std::array<int, 4>> quads;  // (i, j) -> (k, l)
  std::map<std::array<int, 4>, int> quad_index;
};
const GridShape& grid_shape(int n);

struct BurnsideSimplex {
  int n = -1;
  std::vector<int> obj;  // by pair index
  std::vector<int> arr;  // by quad index
};

class AeffVirtual final : public VirtualSSet {
 public:
  explicit AeffVirtual(AdequateTriple t);
  std::vector<VSimplex> simplices(int d) const override;
  VSimplex face(const VSimplex& s, int i) const override;
  VSimplex degeneracy(const VSimplex& s, int i) const override;
  std::vector<VSimplex> cofill(int d, const std::vector<VSimplex>& faces) const override;

  static VSimplex encode(const BurnsideSimplex& g);
  static BurnsideSimplex decode(const VSimplex& s);

  const AdequateTriple& triple() const { return t_; }
  const PullbackCache& cache() const { return cache_; }
  bool valid_simplex(const BurnsideSimplex& g) const;

 private:
  VSimplex reindex(const VSimplex& s, const DeltaMorphism& f) const;

  AdequateTriple t_;
  PullbackCache cache_;
};

LiftTarget aeff_target(const AdequateTriple& t, int enumerate_bound);

FibrationReport check_pr22(const AdequateTriple& t, int bound);

// inclusions N(C_ing) -> A^eff and N((C_egr)^op) -> A^eff on materializations
struct TripleInclusions {
  SimplicialMap ingressive_incl;
  SimplicialMap egressive_op_incl;
};
TripleInclusions triple_inclusions(const AdequateTriple& t, int bound);

// ---- unfurling instance checker ---------------------------------------------

struct Thm24Report {
  bool hypotheses_ok = false;
  bool h_preserves = false;
  bool h_241 = false;
  bool h_242 = false;
  bool conclusion_inner = false;
  bool conclusion_cocartesian = false;
  long span_edges_checked = 0;
  std::string failure;
  bool pass() const {
    return hypotheses_ok && conclusion_inner && conclusion_cocartesian;
  }
};

Thm24Report check_thm24(const FunctorData& p, const AdequateTriple& tc,
                        const AdequateTriple& td, int bound);

// ---- dual fibrations ----------------------------------------------------------

// The canonical adequate triple of an inner fibration p : X -> S: ingressive
// over isomorphisms, egressive the p-cartesian morphisms.
AdequateTriple fibration_triple(const FunctorData& p);

struct DualResult {
  LiftTarget total;            // the dual object, a filtered Burnside virtual
  LiftTarget base;             // nerve of S^op (or its opposite wrapper)
  VirtualMapFn proj;
  AdequateTriple triple;       // the triple the Burnside object was built from
  CatPtr base_op;
};

// Right dual of a cartesian fibration p : X -> S (refuses other inputs).
DualResult right_dual(const FunctorData& p, int enumerate_bound);

// Left dual of a cocartesian fibration, computed as the opposite of the
// right dual of the opposite.
DualResult left_dual(const FunctorData& p, int enumerate_bound);

}  // namespace bkit
