// Test-side oracles, independent of the library's construction paths.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bkit/burnside.hpp"
#include "bkit/cat.hpp"

namespace bkit_oracles {

using bkit::CatPtr;
using bkit::FiniteCategory;

// Classical span category by brute force: morphisms are isomorphism classes
// of spans, composition by a chosen pullback representative.
struct SpanCategoryOracle {
  CatPtr spans;  // the resulting category

  explicit SpanCategoryOracle(CatPtr c) {
    const FiniteCategory& cc = *c;
    using Span = std::tuple<int, int, int>;  // (apex u, back u->x, fwd u->y)
    std::vector<Span> all;
    for (size_t b = 0; b < cc.morphisms.size(); ++b)
      for (size_t f = 0; f < cc.morphisms.size(); ++f)
        if (cc.src(static_cast<int>(b)) == cc.src(static_cast<int>(f)))
          all.push_back({cc.src(static_cast<int>(b)), static_cast<int>(b),
                         static_cast<int>(f)});
    auto iso_spans = [&](const Span& s, const Span& t) {
      auto [u, b1, f1] = s;
      auto [v, b2, f2] = t;
      if (cc.tgt(b1) != cc.tgt(b2) || cc.tgt(f1) != cc.tgt(f2)) return false;
      for (size_t h = 0; h < cc.morphisms.size(); ++h) {
        if (cc.src(static_cast<int>(h)) != u || cc.tgt(static_cast<int>(h)) != v)
          continue;
        if (!cc.is_iso(static_cast<int>(h))) continue;
        if (cc.compose(b2, static_cast<int>(h)) == b1 &&
            cc.compose(f2, static_cast<int>(h)) == f1)
          return true;
      }
      return false;
    };
    // iso classes with lexicographically least representatives
    std::vector<Span> reps;
    std::vector<int> cls(all.size(), -1);
    for (size_t k = 0; k < all.size(); ++k) {
      for (size_t r = 0; r < reps.size(); ++r)
        if (iso_spans(all[k], reps[r])) {
          cls[k] = static_cast<int>(r);
          break;
        }
      if (cls[k] < 0) {
        cls[k] = static_cast<int>(reps.size());
        reps.push_back(all[k]);
      }
    }
    auto class_of = [&](const Span& s) {
      for (size_t r = 0; r < reps.size(); ++r)
        if (iso_spans(s, reps[r])) return static_cast<int>(r);
      throw std::logic_error("span oracle: unclassified span");
    };
    // chosen pullbacks for composition
    auto pullback_of = [&](int fwd, int back) {  // cospan . ->fwd c <-back .
      for (size_t p = 0; p < cc.morphisms.size(); ++p)
        for (size_t q = 0; q < cc.morphisms.size(); ++q) {
          if (cc.src(static_cast<int>(p)) != cc.src(static_cast<int>(q))) continue;
          if (cc.tgt(static_cast<int>(p)) != cc.src(fwd)) continue;
          if (cc.tgt(static_cast<int>(q)) != cc.src(back)) continue;
          if (bkit::is_pullback(cc, static_cast<int>(p), static_cast<int>(q), fwd, back))
            return std::make_pair(static_cast<int>(p), static_cast<int>(q));
        }
      throw std::runtime_error("span oracle: missing pullback");
    };

    auto cat = std::make_shared<FiniteCategory>();
    cat->n_objects = cc.n_objects;
    cat->object_names = cc.object_names;
    for (size_t r = 0; r < reps.size(); ++r) {
      auto [u, b, f] = reps[r];
      cat->morphisms.push_back({"s" + std::to_string(r), cc.tgt(b), cc.tgt(f)});
    }
    cat->id_of.assign(static_cast<size_t>(cc.n_objects), -1);
    for (int x = 0; x < cc.n_objects; ++x)
      cat->id_of[static_cast<size_t>(x)] = class_of(
          {x, cc.id_of[static_cast<size_t>(x)], cc.id_of[static_cast<size_t>(x)]});
    cat->comp.assign(reps.size(), std::vector<int>(reps.size(), -1));
    for (size_t s2 = 0; s2 < reps.size(); ++s2)
      for (size_t s1 = 0; s1 < reps.size(); ++s1) {
        if (cat->morphisms[s1].tgt != cat->morphisms[s2].src) continue;
        auto [u1, b1, f1] = reps[s1];
        auto [u2, b2, f2] = reps[s2];
        auto [p, q] = pullback_of(f1, b2);
        cat->comp[s2][s1] =
            class_of({cc.src(p), cc.compose(b1, p), cc.compose(f2, q)});
      }
    cat->validate();
    spans = cat;
  }
};

}  // namespace bkit_oracles
