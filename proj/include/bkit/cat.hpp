// Finite categories and functors, nerves, the classical twisted arrow
// category, homotopy categories of bounded quasi-categories, and the
// 1-categorical Grothendieck constructions.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bkit/lifting.hpp"
#include "bkit/virt.hpp"

namespace bkit {

struct FiniteCategory {
  int n_objects = 0;
  std::vector<std::string> object_names;
  struct Mor {
    std::string name;
    int src = -1;
    int tgt = -1;
    friend bool operator==(const Mor&, const Mor&) = default;
  };
  std::vector<Mor> morphisms;
  std::vector<int> id_of;                 // object -> identity morphism
  std::vector<std::vector<int>> comp;     // comp[g][f] = g . f, or -1

  int compose(int g, int f) const { return comp[static_cast<size_t>(g)][static_cast<size_t>(f)]; }
  int src(int m) const { return morphisms[static_cast<size_t>(m)].src; }
  int tgt(int m) const { return morphisms[static_cast<size_t>(m)].tgt; }
  bool is_identity(int m) const { return id_of[static_cast<size_t>(src(m))] == m; }
  bool is_iso(int m) const;
  std::vector<int> arrows(int a, int b) const;  // Hom(a, b)
  void validate() const;
  int find_morphism(const std::string& name) const;

  friend bool operator==(const FiniteCategory&, const FiniteCategory&) = default;
};

using CatPtr = std::shared_ptr<const FiniteCategory>;

struct FunctorData {
  CatPtr src;
  CatPtr tgt;
  std::vector<int> ob_map;
  std::vector<int> mor_map;

  int on_ob(int a) const { return ob_map[static_cast<size_t>(a)]; }
  int on_mor(int m) const { return mor_map[static_cast<size_t>(m)]; }
  void validate() const;
  friend bool operator==(const FunctorData&, const FunctorData&) = default;
};

FunctorData identity_functor(CatPtr c);
FunctorData compose(const FunctorData& g, const FunctorData& f);
CatPtr opposite_category(CatPtr c);
FunctorData opposite_functor(const FunctorData& f, CatPtr src_op, CatPtr tgt_op);
CatPtr product_category(CatPtr a, CatPtr b);

std::optional<std::pair<std::vector<int>, std::vector<int>>> category_iso_check(
    const FiniteCategory& a, const FiniteCategory& b);

// ---- nerve -----------------------------------------------------------------

// n-simplices are composable chains; vertices are objects.
class NerveVirtual final : public VirtualSSet {
 public:
  explicit NerveVirtual(CatPtr c) : c_(std::move(c)) {}
  std::vector<VSimplex> simplices(int d) const override;
  VSimplex face(const VSimplex& s, int i) const override;
  VSimplex degeneracy(const VSimplex& s, int i) const override;
  std::vector<VSimplex> cofill(int d, const std::vector<VSimplex>& faces) const override;
  int dim_hint() const override;

  static VSimplex chain(const std::vector<int>& morphisms, int object_if_vertex);
  // chain of morphism ids (empty for a vertex, paired with the object)
  static std::pair<std::vector<int>, int> decode(const VSimplex& s);
  CatPtr category() const { return c_; }

 private:
  CatPtr c_;
};

LiftTarget nerve_target(CatPtr c, int enumerate_bound);

// ---- twisted arrow category -------------------------------------------------

// Objects are morphisms of C; an arrow f -> g is a factorization g = v f u.
// Oriented so that the nerve agrees with the edgewise subdivision of N(C).
struct TwistedArrowResult {
  CatPtr cat;
  // arrow of Tw(C) -> the pair (u, v) in C it came from
  std::vector<std::pair<int, int>> factors;
  FunctorData proj;  // Tw(C) -> C^op x C
  CatPtr c_op;
  CatPtr c_sq;       // C^op x C
};
TwistedArrowResult twisted_arrow_cat(CatPtr c);

// Discrete-opfibration oracle: every object and arrow of the base with a
// lifted source has a unique lift.
bool is_discrete_opfibration(const FunctorData& p);

// ---- homotopy category -------------------------------------------------------

struct HomotopyCategoryResult {
  bool ok = false;
  std::string failure;
  CatPtr cat;
  // class of each 1-simplex handle, aligned with cat morphism ids
  std::map<VSimplex, int> edge_class;
};

// X given as a virtual object enumerable to dimension >= 3 with inner horn
// fillers within that range (checked on the materialized part).
HomotopyCategoryResult homotopy_category(const LiftTarget& x);

// ---- Grothendieck construction ------------------------------------------------

struct CatValuedFunctor {
  CatPtr base;
  bool contravariant = false;
  std::vector<CatPtr> fiber;            // per base object
  std::vector<FunctorData> on_arrow;    // per base morphism
  void validate() const;                // strict functoriality
};

struct GrothendieckResult {
  CatPtr total;
  FunctorData proj;                     // total -> base
  std::vector<char> marked;             // per total morphism: canonical (co)cartesian
  // decomposition of each total object/morphism
  std::vector<std::pair<int, int>> object_pair;  // (base object, fiber object)
  std::vector<std::pair<int, int>> morphism_pair;  // (base morphism, fiber morphism)
};

GrothendieckResult grothendieck(const CatValuedFunctor& g);

// 1-categorical (co)cartesian tests.
bool is_cocartesian_morphism(const FunctorData& p, int f);
bool is_cartesian_morphism(const FunctorData& p, int f);

}  // namespace bkit
