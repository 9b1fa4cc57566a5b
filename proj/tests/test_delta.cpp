#include "doctest.h"

#include "bkit/delta.hpp"

using namespace bkit;

TEST_CASE("join on objects") {
  CHECK(join_objects(0, 0) == 1);
  CHECK(join_objects(1, 1) == 3);
  // associativity on objects
  CHECK(join_objects(join_objects(1, 1), 2) == 6);
  CHECK(join_objects(1, join_objects(1, 2)) == 6);
}

TEST_CASE("endoword evaluation on objects") {
  CHECK(eval_endoword_object({EndoLetter::Id}, 5) == 5);
  CHECK(eval_endoword_object({EndoLetter::Kappa}, 5) == 0);
  CHECK(eval_endoword_object(epsilon_word(), 1) == 3);
  CHECK(eval_endoword_object(epsilon_word(), 0) == 1);
}

TEST_CASE("endoword evaluation on morphisms") {
  auto id1 = DeltaMorphism::identity(1);
  CHECK(eval_endoword({EndoLetter::Id}, id1) == id1);
  CHECK(eval_endoword({EndoLetter::Kappa}, DeltaMorphism::coface(3, 1)) ==
        DeltaMorphism::identity(0));
  CHECK(eval_endoword(epsilon_word(), id1) == DeltaMorphism::identity(3));
}

TEST_CASE("opposite morphism reverses") {
  auto d0 = DeltaMorphism::coface(1, 0);  // [0] -> [1], 0 |-> 1
  auto op = opposite_morphism(d0);
  CHECK(op.table == std::vector<int>{0});
  CHECK(opposite_morphism(op) == d0);
}

TEST_CASE("functoriality of endoword evaluation, words <= 4, arity <= 3") {
  for (const auto& w : all_endowords(4)) {
    for (int n = 0; n <= 3; ++n) {
      auto idn = DeltaMorphism::identity(n);
      CHECK(eval_endoword(w, idn).is_identity());
    }
  }
  // composites: check on all pairs of composable maps with arities <= 2
  for (const auto& w : all_endowords(2)) {
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          for (const auto& f : all_monotone_maps(a, b))
            for (const auto& g : all_monotone_maps(b, c)) {
              auto lhs = eval_endoword(w, compose(g, f));
              auto rhs = compose(eval_endoword(w, g), eval_endoword(w, f));
              REQUIRE(lhs == rhs);
            }
  }
}

TEST_CASE("bounded freeness witnesses") {
  // id vs op distinguished already on a coface of [1]
  auto wit = distinct_words_witness({EndoLetter::Id}, {EndoLetter::Op}, 3);
  REQUIRE(wit.has_value());
  CHECK(wit->morphism.has_value());

  auto wit2 = distinct_words_witness({EndoLetter::Id, EndoLetter::Kappa},
                                     {EndoLetter::Kappa, EndoLetter::Id}, 2);
  REQUIRE(wit2.has_value());

  CHECK(!distinct_words_witness(epsilon_word(), epsilon_word(), 3).has_value());

  // all distinct pairs of words of length <= 3 distinguished at bound 3
  auto words = all_endowords(3);
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j)
      REQUIRE(distinct_words_witness(words[i], words[j], 3).has_value());
}

TEST_CASE("epi-mono factorization") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& f : all_monotone_maps(m, n)) {
        auto fac = factor_epi_mono(f);
        // rebuild f from the factors
        DeltaMorphism g = DeltaMorphism::identity(m);
        int mid = m - static_cast<int>(fac.repeated.size());
        DeltaMorphism epi = DeltaMorphism::identity(m);
        for (auto it = fac.repeated.rbegin(); it != fac.repeated.rend(); ++it) {
          // s_{j}: [k+1] -> [k] composed outermost-last
          epi = compose(DeltaMorphism::codegeneracy(epi.target - 1, *it), epi);
        }
        CHECK(epi.target == mid);
        DeltaMorphism mono = DeltaMorphism::identity(mid);
        for (auto it = fac.missed.rbegin(); it != fac.missed.rend(); ++it)
          mono = compose(DeltaMorphism::coface(mono.target + 1, *it), mono);
        CHECK(compose(mono, epi) == f);
      }
}
