#include "doctest.h"

#include "bkit/cat.hpp"
#include "bkit/edgewise.hpp"

using namespace bkit;

namespace {

CatPtr chain_poset(int n) {  // poset 0 < 1 < ... < n-1
  auto c = std::make_shared<FiniteCategory>();
  c->n_objects = n;
  for (int a = 0; a < n; ++a) c->object_names.push_back(std::to_string(a));
  std::map<std::pair<int, int>, int> idx;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      idx[{a, b}] = static_cast<int>(c->morphisms.size());
      c->morphisms.push_back({std::to_string(a) + "<=" + std::to_string(b), a, b});
    }
  for (int a = 0; a < n; ++a) c->id_of.push_back(idx.at({a, a}));
  c->comp.assign(c->morphisms.size(), std::vector<int>(c->morphisms.size(), -1));
  for (auto& [gp, g] : idx)
    for (auto& [fp, f] : idx)
      if (fp.second == gp.first) c->comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = idx.at({fp.first, gp.second});
  c->validate();
  return c;
}

CatPtr cyclic_group(int n) {
  auto c = std::make_shared<FiniteCategory>();
  c->n_objects = 1;
  c->object_names = {"*"};
  for (int g = 0; g < n; ++g) c->morphisms.push_back({"g" + std::to_string(g), 0, 0});
  c->id_of = {0};
  c->comp.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c->comp[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  c->validate();
  return c;
}

}  // namespace

TEST_CASE("nerves of chain posets are standard simplices") {
  for (int n = 1; n <= 3; ++n) {
    auto c = chain_poset(n + 1);
    auto nv = std::make_shared<NerveVirtual>(c);
    CHECK(nv->dim_hint() == n);
    auto mat = materialize(nv, n);
    mat.sset->validate();
    CHECK(iso_check(mat.sset, standard_simplex(n)).has_value());
  }
}

TEST_CASE("nerve of Z/2 has one nondegenerate simplex per dimension") {
  auto z2 = cyclic_group(2);
  auto nv = std::make_shared<NerveVirtual>(z2);
  CHECK(nv->dim_hint() == -1);
  auto mat = materialize(nv, 4);
  for (int d = 0; d <= 4; ++d) CHECK(mat.sset->count(d) == 1);
  mat.sset->validate();
}

TEST_CASE("twisted arrow category of a chain") {
  auto c2 = chain_poset(2);
  auto tw = twisted_arrow_cat(c2);
  CHECK(tw.cat->n_objects == 3);
  // cospan: id_0 -> (0<=1) <- id_1, plus identities
  int nonid = 0;
  for (size_t m = 0; m < tw.cat->morphisms.size(); ++m)
    if (!tw.cat->is_identity(static_cast<int>(m))) ++nonid;
  CHECK(nonid == 2);

  auto c3 = chain_poset(3);
  auto tw3 = twisted_arrow_cat(c3);
  CHECK(tw3.cat->n_objects == 6);
  int nonid3 = 0;
  for (size_t m = 0; m < tw3.cat->morphisms.size(); ++m)
    if (!tw3.cat->is_identity(static_cast<int>(m))) ++nonid3;
  CHECK(nonid3 == 9);
}

TEST_CASE("nerve of the twisted arrow category is the edgewise subdivision") {
  for (int n = 2; n <= 4; ++n) {
    auto c = chain_poset(n);
    auto tw = twisted_arrow_cat(c);
    auto ntw = materialize(std::make_shared<NerveVirtual>(tw.cat), 4).sset;
    auto env = std::make_shared<EdgewiseVirtual>(std::make_shared<NerveVirtual>(c));
    auto otw = materialize(env, 4).sset;
    CHECK(iso_check(ntw, otw).has_value());
  }
  // and for a group
  auto z2 = cyclic_group(2);
  auto tw = twisted_arrow_cat(z2);
  auto ntw = materialize(std::make_shared<NerveVirtual>(tw.cat), 3).sset;
  auto env = std::make_shared<EdgewiseVirtual>(std::make_shared<NerveVirtual>(z2));
  auto otw = materialize(env, 3).sset;
  CHECK(iso_check(ntw, otw).has_value());
}

TEST_CASE("twisted arrow projection is a discrete opfibration") {
  for (int n = 2; n <= 4; ++n) {
    auto tw = twisted_arrow_cat(chain_poset(n));
    CHECK(is_discrete_opfibration(tw.proj));
  }
  CHECK(is_discrete_opfibration(twisted_arrow_cat(cyclic_group(3)).proj));
}

TEST_CASE("homotopy category of a nerve recovers the category") {
  for (int n = 1; n <= 3; ++n) {
    auto c = chain_poset(n + 1);
    auto hq = homotopy_category(nerve_target(c, 3));
    REQUIRE(hq.ok);
    CHECK(category_iso_check(*hq.cat, *c).has_value());
  }
  auto z2 = cyclic_group(2);
  auto hq = homotopy_category(nerve_target(z2, 3));
  REQUIRE(hq.ok);
  CHECK(category_iso_check(*hq.cat, *z2).has_value());
}

TEST_CASE("homotopy category of a point") {
  auto pt = chain_poset(1);
  auto hq = homotopy_category(nerve_target(pt, 3));
  REQUIRE(hq.ok);
  CHECK(hq.cat->n_objects == 1);
  CHECK(hq.cat->morphisms.size() == 1);
}

TEST_CASE("covariant grothendieck construction: discrete fibers") {
  // S = {0<1}, G(0) = {a,b} discrete, G(1) = {*}
  auto s = chain_poset(2);
  auto two = std::make_shared<FiniteCategory>();
  two->n_objects = 2;
  two->object_names = {"a", "b"};
  two->morphisms = {{"ida", 0, 0}, {"idb", 1, 1}};
  two->id_of = {0, 1};
  two->comp = {{0, -1}, {-1, 1}};
  two->validate();
  auto one = chain_poset(1);

  CatValuedFunctor g;
  g.base = s;
  g.fiber = {two, one};
  FunctorData collapse;
  collapse.src = two;
  collapse.tgt = one;
  collapse.ob_map = {0, 0};
  collapse.mor_map = {0, 0};
  g.on_arrow.resize(s->morphisms.size());
  g.on_arrow[static_cast<size_t>(s->id_of[0])] = identity_functor(two);
  g.on_arrow[static_cast<size_t>(s->id_of[1])] = identity_functor(one);
  for (size_t m = 0; m < s->morphisms.size(); ++m)
    if (s->src(static_cast<int>(m)) == 0 && s->tgt(static_cast<int>(m)) == 1)
      g.on_arrow[m] = collapse;

  auto gr = grothendieck(g);
  CHECK(gr.total->n_objects == 3);
  int nonid = 0, marked_nonid = 0;
  for (size_t m = 0; m < gr.total->morphisms.size(); ++m) {
    if (gr.total->is_identity(static_cast<int>(m))) continue;
    ++nonid;
    if (gr.marked[m]) ++marked_nonid;
  }
  CHECK(nonid == 2);
  CHECK(marked_nonid == 2);
}

TEST_CASE("grothendieck over the terminal base is the fiber") {
  auto pt = chain_poset(1);
  auto f = chain_poset(3);
  CatValuedFunctor g;
  g.base = pt;
  g.fiber = {f};
  g.on_arrow = {identity_functor(f)};
  auto gr = grothendieck(g);
  CHECK(category_iso_check(*gr.total, *f).has_value());
  // all edges over the point are marked iff isos (identities here)
  for (size_t m = 0; m < gr.total->morphisms.size(); ++m)
    CHECK((gr.marked[m] != 0) == gr.total->is_identity(static_cast<int>(m)));
}

TEST_CASE("category isomorphism checker") {
  auto a = chain_poset(3);
  auto b = chain_poset(3);
  CHECK(category_iso_check(*a, *b).has_value());
  CHECK(!category_iso_check(*a, *chain_poset(2)).has_value());
  CHECK(!category_iso_check(*cyclic_group(2), *chain_poset(1)).has_value());
}
