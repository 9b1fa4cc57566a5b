#include "doctest.h"

#include "bkit/marked.hpp"

using namespace bkit;

TEST_CASE("square object shape") {
  const SquareObject& sq = square_object();
  CHECK(sq.obj->count(0) == 4);
  CHECK(sq.obj->count(1) == 5);
  CHECK(sq.obj->count(2) == 2);
  CHECK(sq.cell_count == 11);
}

TEST_CASE("constant and degenerate squares") {
  const SquareObject& sq = square_object();
  auto d1 = standard_simplex(1);
  // constant square at vertex 0
  SimplicialMap cst;
  cst.src = sq.obj;
  cst.tgt = d1;
  cst.assign.resize(3);
  for (int d = 0; d <= 2; ++d)
    for (int k = 0; k < sq.obj->count(d); ++k) {
      SimplexRef v = nondeg_ref(0, 0);
      for (int i = 0; i < d; ++i) v = d1->degenerate(v, 0);
      cst.assign[static_cast<size_t>(d)].push_back(v);
    }
  cst.validate();
  auto q = square_from_map(cst);
  CHECK(square_constant(*d1, q));
  CHECK(square_degenerate(*d1, q));

  // the square collapsing onto the edge along the first axis
  SimplicialMap pr;
  pr.src = sq.obj;
  pr.tgt = d1;
  pr.assign.resize(3);
  for (int d = 0; d <= 2; ++d)
    for (int k = 0; k < sq.obj->count(d); ++k) {
      DeltaMorphism mu;
      mu.source = d;
      mu.target = 1;
      for (const auto& [a, b] : sq.coords[static_cast<size_t>(d)][static_cast<size_t>(k)])
        mu.table.push_back(a);
      pr.assign[static_cast<size_t>(d)].push_back(d1->act(mu, nondeg_ref(1, 0)));
    }
  pr.validate();
  auto qp = square_from_map(pr);
  CHECK(!square_constant(*d1, qp));
  CHECK(square_degenerate(*d1, qp));
}

TEST_CASE("l markings") {
  auto lp = l_marking(simplex_subcomplex(3, {{0, 1}}));
  CHECK(lp.marked.size() == 1);
  auto lq = l_marking(simplex_subcomplex(3, {{1, 2}}));
  CHECK(lq.marked.empty());
  auto lh = l_marking(horn_inclusion(2, {0}));
  CHECK(lh.marked.size() == 1);
  CHECK(lh.s->find(1, "01") == *lh.marked.begin());
}

TEST_CASE("subobjects preserve ambient names and order") {
  auto d3 = standard_simplex(3);
  CellSet cells;
  // the subcomplex generated by the faces 012 and 23
  int t012 = d3->find(2, "012");
  int e23 = d3->find(1, "23");
  cells.insert({2, t012});
  cells.insert({1, e23});
  cells = close_under_faces(*d3, cells);
  auto sub = subobject_of(d3, cells);
  sub.obj->validate();
  CHECK(sub.incl.is_mono());
  // fresh build of the same subcomplex is structurally identical
  auto fresh = simplex_subcomplex(3, {{0, 1, 2}, {2, 3}});
  CHECK(*sub.obj == *fresh.src);
}

TEST_CASE("poset nerve of a chain is a simplex") {
  std::vector<std::string> names = {"0", "1", "2"};
  auto pn = poset_nerve(names, [](int a, int b) { return a <= b; });
  pn.obj->validate();
  CHECK(iso_check(pn.obj, standard_simplex(2)).has_value());
}

TEST_CASE("marked map checks") {
  auto incl01 = simplex_subcomplex(2, {{0, 1}});
  MarkedSSet src = l_marking(incl01);
  MarkedSSet tgt = l_marking(identity_map(standard_simplex(2)));
  // wait: identity map of the simplex marks its own 01
  CHECK(is_marked_map(incl01, src, tgt));
  MarkedSSet flat{incl01.tgt, {}};
  CHECK(!is_marked_map(incl01, src, flat));
}
