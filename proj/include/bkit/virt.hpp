// Virtual simplicial sets: dimensionwise enumerable objects with face and
// degeneracy operators and decidable simplex equality. Nerves, edgewise
// subdivisions and Burnside constructions are exposed this way and
// materialized to a finite truncation on demand.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "bkit/smap.hpp"
#include "bkit/sset.hpp"

namespace bkit {

// Opaque simplex handle; keys are canonical per object, equality is equality.
struct VSimplex {
  int dim = -1;
  std::vector<int64_t> key;
  friend bool operator==(const VSimplex&, const VSimplex&) = default;
  friend auto operator<=>(const VSimplex&, const VSimplex&) = default;
};

struct VSimplexHash {
  size_t operator()(const VSimplex& v) const {
    size_t h = std::hash<int>()(v.dim);
    for (int64_t x : v.key) h = h * 1000003u + std::hash<int64_t>()(x);
    return h;
  }
};

class VirtualSSet {
 public:
  virtual ~VirtualSSet() = default;

  // All d-simplices, degenerate ones included.
  virtual std::vector<VSimplex> simplices(int d) const = 0;
  virtual VSimplex face(const VSimplex& s, int i) const = 0;
  virtual VSimplex degeneracy(const VSimplex& s, int i) const = 0;

  // Candidates for a d-simplex with the given face vector. The default
  // filters simplices(d); representable objects override with a direct
  // completion, which keeps lifting searches away from full enumeration.
  virtual std::vector<VSimplex> cofill(int d, const std::vector<VSimplex>& faces) const;

  // Largest dimension with nondegenerate simplices, when known (-1: unknown).
  virtual int dim_hint() const { return -1; }

  VSimplex act(const DeltaMorphism& f, const VSimplex& s) const;
  bool is_degenerate(const VSimplex& s) const;
};

using VirtPtr = std::shared_ptr<const VirtualSSet>;

// A finite simplicial set viewed as a virtual one; keys encode refs.
class FiniteVirtual final : public VirtualSSet {
 public:
  explicit FiniteVirtual(SSetPtr s) : s_(std::move(s)) {}
  std::vector<VSimplex> simplices(int d) const override;
  VSimplex face(const VSimplex& s, int i) const override;
  VSimplex degeneracy(const VSimplex& s, int i) const override;
  std::vector<VSimplex> cofill(int d, const std::vector<VSimplex>& faces) const override;
  int dim_hint() const override { return s_->dim(); }

  static VSimplex encode(const SimplexRef& r);
  static SimplexRef decode(const VSimplex& v);
  SSetPtr object() const { return s_; }

 private:
  SSetPtr s_;
};

class OppositeVirtual final : public VirtualSSet {
 public:
  explicit OppositeVirtual(VirtPtr s) : s_(std::move(s)) {}
  std::vector<VSimplex> simplices(int d) const override { return s_->simplices(d); }
  VSimplex face(const VSimplex& s, int i) const override {
    return s_->face(s, s.dim - i);
  }
  VSimplex degeneracy(const VSimplex& s, int i) const override {
    return s_->degeneracy(s, s.dim - i);
  }
  int dim_hint() const override { return s_->dim_hint(); }
  VirtPtr base() const { return s_; }

 private:
  VirtPtr s_;
};

class ProductVirtual final : public VirtualSSet {
 public:
  ProductVirtual(VirtPtr a, VirtPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  std::vector<VSimplex> simplices(int d) const override;
  VSimplex face(const VSimplex& s, int i) const override;
  VSimplex degeneracy(const VSimplex& s, int i) const override;
  std::vector<VSimplex> cofill(int d, const std::vector<VSimplex>& faces) const override;
  int dim_hint() const override;

  static VSimplex pair(const VSimplex& x, const VSimplex& y);
  static std::pair<VSimplex, VSimplex> unpair(const VSimplex& v);

 private:
  VirtPtr a_, b_;
};

// Finite truncation of a virtual object at a dimension bound, with a
// two-way dictionary between handles and normal-form refs.
struct Materialization {
  SSetPtr sset;
  VirtPtr origin;
  int bound = -1;
  mutable std::unordered_map<VSimplex, SimplexRef, VSimplexHash> to_ref;
  std::vector<std::vector<VSimplex>> nondeg;  // per dim, aligned with sset ids

  // Normal form of a handle; resolves degenerate handles lazily, so handles
  // of any dimension over registered cores are accepted.
  SimplexRef ref_of(const VSimplex& v) const;
  VSimplex vs_of(const SimplexRef& r) const;
};

Materialization materialize(VirtPtr v, int bound);

// Convenience: materialized categorical product of two finite objects.
SSetPtr product(SSetPtr a, SSetPtr b);
SSetPtr opposite(SSetPtr a);

// Transport of a map along materializations: needs an assignment on handles.
SimplicialMap map_from_assignment(
    const Materialization& src, const Materialization& tgt,
    const std::function<VSimplex(const VSimplex&)>& on_handles);

}  // namespace bkit
