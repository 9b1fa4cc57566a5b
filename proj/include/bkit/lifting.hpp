// Lifting-property decisions by exhaustive search: enumeration of simplicial
// maps from a finite source into a (possibly virtual) target, solvers for
// individual lifting problems, and bounded fibration checks.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "bkit/virt.hpp"

namespace bkit {

// A map from a finite source into a virtual target, by handle assignment.
struct VAssignment {
  SSetPtr src;
  VirtPtr tgt;
  std::vector<std::vector<VSimplex>> assign;

  VSimplex apply(const SimplexRef& r) const;
  friend bool operator==(const VAssignment&, const VAssignment&) = default;
};

using VirtualMapFn = std::function<VSimplex(const VSimplex&)>;

// A virtual target plus the dimension range over which full enumeration is
// allowed; beyond it, candidates come from cofill only.
struct LiftTarget {
  VirtPtr v;
  int enumerate_bound = -1;

  // Pools and face-vector indexes are cached per target.
  struct Cache {
    std::map<int, std::vector<VSimplex>> pool;
    std::map<int, std::unordered_map<size_t, std::vector<VSimplex>>> index;
  };
  mutable std::shared_ptr<Cache> cache = std::make_shared<Cache>();

  const std::vector<VSimplex>& pool(int d) const;
  std::vector<VSimplex> candidates(int d, const std::vector<VSimplex>& faces) const;
};

LiftTarget finite_target(SSetPtr s);

struct SquareImageOracle {
  // Receives image handles of the canonical square's nondegenerate cells.
  std::function<bool(const std::vector<VSimplex>&)> is_blazed;
};

struct MapConstraints {
  std::vector<std::pair<SimplexId, VSimplex>> pinned;
  // Fiber condition: proj(f(x)) == required.apply(x) for a projection out of
  // the target and a fixed bottom map on the same source.
  const VirtualMapFn* proj = nullptr;
  const VAssignment* required = nullptr;
  // Marked flavor: which nondegenerate source edges must land on marked edges.
  std::function<bool(SimplexId)> src_edge_marked;
  std::function<bool(const VSimplex&)> tgt_edge_marked;
  // Marbled flavor: source blazes as cell assignments over the canonical
  // square, plus the target blaze test.
  const std::vector<std::vector<SimplexRef>>* src_blazes = nullptr;
  const SquareImageOracle* tgt_blazes = nullptr;
};

// Enumerates maps src -> target subject to the constraints; the callback may
// return false to stop early. Returns the number of maps emitted.
long enumerate_maps(SSetPtr src, const LiftTarget& target,
                    const MapConstraints& constraints,
                    const std::function<bool(const VAssignment&)>& emit);

long count_maps(SSetPtr src, const LiftTarget& target);

struct LiftingProblem {
  SimplicialMap incl;      // i : A -> B, a monomorphism of finite objects
  LiftTarget total;        // X
  LiftTarget base;         // Y
  VirtualMapFn proj;       // p : X -> Y on handles
  VAssignment top;         // A -> X
  VAssignment bottom;      // B -> Y
  // optional flavor constraints applied to the lift B -> X
  std::function<bool(SimplexId)> src_edge_marked;
  std::function<bool(const VSimplex&)> tgt_edge_marked;
  const std::vector<std::vector<SimplexRef>>* src_blazes = nullptr;
  const SquareImageOracle* tgt_blazes = nullptr;
};

std::optional<VAssignment> has_lift(const LiftingProblem& prob);

enum class FibrationKind { Inner, Left, Trivial };

struct FibrationReport {
  FibrationKind kind = FibrationKind::Inner;
  int bound = 0;
  bool pass = false;
  bool definitive = false;   // when coskeletality makes the bound conclusive
  long problems_checked = 0;
  std::string witness;       // description of the first failing problem
};

// Bundles a map of virtual objects for fibration checking.
struct VirtualArrow {
  LiftTarget total;
  LiftTarget base;
  VirtualMapFn proj;
  int coskeletal_hint_total = -1;  // -1: unknown
  int coskeletal_hint_base = -1;
};

VirtualArrow arrow_to_point(const LiftTarget& total, int coskeletal_hint = -1);
VirtualArrow arrow_between(const LiftTarget& total, const LiftTarget& base,
                           VirtualMapFn proj, int cosk_total = -1, int cosk_base = -1);

FibrationReport check_fibration(const VirtualArrow& p, FibrationKind kind, int bound);

// Cocartesian-edge test: every left-horn problem whose initial edge is e
// admits a solution, for 2 <= n <= bound.
FibrationReport check_cocartesian_edge(const VirtualArrow& p, const VSimplex& e,
                                       int bound);

}  // namespace bkit
