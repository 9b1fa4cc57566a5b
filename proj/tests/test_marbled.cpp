#include "doctest.h"

#include "bkit/corpus.hpp"
#include "bkit/marbled_f.hpp"

using namespace bkit;

namespace {

CatValuedFunctor constant_cov(CatPtr base, CatPtr fiber) {
  CatValuedFunctor g;
  g.base = base;
  g.fiber.assign(static_cast<size_t>(base->n_objects), fiber);
  g.on_arrow.assign(base->morphisms.size(), identity_functor(fiber));
  return g;
}

long count_weak_triples(int n) {
  long c = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int h = j; h <= n; ++h) ++c;
  return c;
}

}  // namespace

TEST_CASE("figures: F of the point, the edge and the triangle") {
  const FDelta& f0 = f_delta(0);
  CHECK(f0.nerve.obj->count(0) == 1);
  CHECK(f0.nerve.obj->dim() == 0);
  CHECK(f0.marbled.nondegenerate_blaze_count() == 0);

  const FDelta& f1 = f_delta(1);
  CHECK(f1.nerve.obj->count(0) == 4);
  CHECK(f1.nerve.obj->count(1) == 3);
  CHECK(f1.marbled.marked.size() == 1);
  // the marked edge runs 000 -> 001
  int e = *f1.marbled.marked.begin();
  const auto& ch = f1.nerve.chain[1][static_cast<size_t>(e)];
  CHECK(f1.triple[static_cast<size_t>(ch[0])] == std::array<int, 3>{0, 0, 0});
  CHECK(f1.triple[static_cast<size_t>(ch[1])] == std::array<int, 3>{0, 0, 1});
  CHECK(f1.marbled.nondegenerate_blaze_count() == 0);

  const FDelta& f2 = f_delta(2);
  CHECK(f2.nerve.obj->count(0) == 10);
  CHECK(f2.marbled.nondegenerate_blaze_count() == 1);
  // its corners, per the defining condition: ((1,1),2),((1,2),2),((0,1),2),((0,2),2)
  const SquareObject& sq = square_object();
  for (const auto& q : f2.marbled.blazes) {
    if (square_degenerate(*f2.nerve.obj, q)) continue;
    auto corner = [&](int a, int b) {
      SimplexRef r = q[static_cast<size_t>(sq.corner[a][b].idx)];
      return f2.triple[static_cast<size_t>(
          f2.nerve.chain[0][static_cast<size_t>(r.target.idx)][0])];
    };
    CHECK(corner(0, 0) == std::array<int, 3>{0, 2, 2});
    CHECK(corner(1, 0) == std::array<int, 3>{1, 2, 2});
    CHECK(corner(0, 1) == std::array<int, 3>{0, 1, 2});
    CHECK(corner(1, 1) == std::array<int, 3>{1, 1, 2});
  }
}

TEST_CASE("vertex counts of F agree with the triple count") {
  for (int n = 0; n <= 4; ++n)
    CHECK(f_delta(n).nerve.obj->count(0) == count_weak_triples(n));
  CHECK(count_weak_triples(2) == 10);  // (n+1)(n+2)(n+3)/6 at n = 2
}

TEST_CASE("F of subcomplexes and the colimit presentation agree") {
  // spine of the triangle, via the subobject route and via gluing
  auto spine = spine_inclusion(2);
  FSub direct = f_of_subcomplex(2, {{0, 1}, {1, 2}});
  MarkedSSet flat{spine.src, {}};
  FResult glued = f_marked(flat);
  auto iso = iso_check(direct.obj.s, glued.obj.s);
  REQUIRE(iso.has_value());
  // marks and blazes transport along the isomorphism
  std::set<int> mapped_marks;
  for (int e : direct.obj.marked)
    mapped_marks.insert(iso->assign[1][static_cast<size_t>(e)].target.idx);
  CHECK(mapped_marks == glued.obj.marked);
  std::vector<SquareAssign> mapped_blazes;
  for (const auto& q : direct.obj.blazes) mapped_blazes.push_back(push_square(*iso, q));
  std::sort(mapped_blazes.begin(), mapped_blazes.end());
  CHECK(mapped_blazes == glued.obj.blazes);
}

TEST_CASE("naturality of the projection out of F") {
  auto d2 = standard_simplex(2);
  MarkedSSet flat{d2, {}};
  FResult f = f_marked(flat);
  f.to_input.validate();
  // composing with F of a coface equals acting then projecting
  const FDelta& f1 = f_delta(1);
  (void)f1;
  CHECK(f.to_input.src->count(0) == 10);
}

TEST_CASE("marbled fibration construction and refusal") {
  auto g = constant_cov(make_chain(2), make_chain(2));
  auto p = make_marbled_fibration(g, 3);
  CHECK(p.gr.total->n_objects == 4);

  // pushforward failing to preserve meets is refused
  CatPtr diamond = make_diamond();
  CatPtr c2 = make_chain(2);
  FunctorData bad;
  bad.src = diamond;
  bad.tgt = c2;
  bad.ob_map = {0, 1, 1, 1};  // bot -> 0, everything else -> 1
  bad.mor_map.assign(diamond->morphisms.size(), -1);
  for (size_t m = 0; m < diamond->morphisms.size(); ++m) {
    int a = bad.ob_map[static_cast<size_t>(diamond->src(static_cast<int>(m)))];
    int b = bad.ob_map[static_cast<size_t>(diamond->tgt(static_cast<int>(m)))];
    bad.mor_map[m] = c2->find_morphism(std::to_string(a) + "to" + std::to_string(b));
  }
  bad.validate();
  CatValuedFunctor gbad;
  gbad.base = make_chain(2);
  gbad.fiber = {diamond, c2};
  gbad.on_arrow.resize(gbad.base->morphisms.size());
  gbad.on_arrow[static_cast<size_t>(gbad.base->id_of[0])] = identity_functor(diamond);
  gbad.on_arrow[static_cast<size_t>(gbad.base->id_of[1])] = identity_functor(c2);
  gbad.on_arrow[static_cast<size_t>(gbad.base->find_morphism("0to1"))] = bad;
  CHECK_THROWS(make_marbled_fibration(gbad, 3));
}

TEST_CASE("fibrewise Burnside object over the point") {
  auto g = constant_cov(make_chain(1), make_chain(2));
  auto p = make_marbled_fibration(g, 3);
  auto a = aeff_fibrewise(p, 3);
  // vertices are the vertices of the fiber
  CHECK(a.total.pool(0).size() == 2);
  // dimension 1 count matches A^eff of the fiber up to the marked structure:
  // spans in the chain poset
  CHECK(a.total.pool(1).size() == 5);
}

TEST_CASE("fibrewise vertices over an interval base") {
  auto g = constant_cov(make_chain(2), make_chain(2));
  auto p = make_marbled_fibration(g, 3);
  auto a = aeff_fibrewise(p, 3);
  // fiber vertex counts over the two base vertices are both 2
  int over0 = 0, over1 = 0;
  for (const auto& v : a.total.pool(0)) {
    auto [ms, ob] = NerveVirtual::decode(a.rho(v));
    if (ob == 0) ++over0;
    if (ob == 1) ++over1;
  }
  CHECK(over0 == 2);
  CHECK(over1 == 2);

  // edges over the nondegenerate base edge: cocartesian-pushforward spans,
  // counted independently: x in F0, u <= pushforward(x), u <= z
  long expected = 0;
  for (int x = 0; x <= 1; ++x)
    for (int u = 0; u <= 1; ++u)
      for (int z = 0; z <= 1; ++z)
        if (u <= x && u <= z) ++expected;
  long got = 0;
  for (const auto& e : a.total.pool(1)) {
    auto [ms, ob] = NerveVirtual::decode(a.rho(e));
    if (!p.g.base->is_identity(ms.at(0))) ++got;
  }
  CHECK(got == expected);
}

TEST_CASE("representability of the fibrewise construction") {
  auto g = constant_cov(make_chain(2), make_chain(2));
  auto p = make_marbled_fibration(g, 3);
  auto a = aeff_fibrewise(p, 3);
  for (int n = 0; n <= 2; ++n) {
    std::vector<int> all;
    for (int v = 0; v <= n; ++v) all.push_back(v);
    auto rep = check_representability(a, simplex_subcomplex(n, {all}), n);
    CHECK(rep.pass);
  }
  // and against a horn
  auto reph = check_representability(a, horn_inclusion(2, {0}), 2);
  CHECK(reph.pass);
}

TEST_CASE("marbled lift test is vacuous on identities") {
  FSub f2 = f_of_subcomplex(2, {{0, 1, 2}});
  auto fam = marbled_fibration_family(2);
  auto rep = marbled_trivial_cofib_test(identity_map(f2.obj.s), f2.obj, f2.obj, fam);
  CHECK(rep.pass);
}

TEST_CASE("fiber comparison is a trivial fibration") {
  auto g = constant_cov(make_chain(2), make_chain(2));
  auto p = make_marbled_fibration(g, 3);
  auto a = aeff_fibrewise(p, 3);
  for (int s = 0; s <= 1; ++s) {
    auto rep = fiber_comparison(a, s, 2);
    CHECK(rep.pass);
  }
}

TEST_CASE("thm 3.10 clauses over the interval") {
  auto g = constant_cov(make_chain(2), make_chain(2));
  auto p = make_marbled_fibration(g, 3);
  auto a = aeff_fibrewise(p, 3);
  // bound 3: the cocartesian search below that is too coarse to separate
  // marked from unmarked edges
  auto rep = verify_thm310(a, 3);
  CHECK(rep.inner);
  CHECK(rep.marked_lifts);
  CHECK(rep.marked_are_cocartesian);
  CHECK(rep.cocartesian_are_marked);
  CHECK(rep.pass());
}
