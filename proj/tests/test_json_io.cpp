#include "doctest.h"

#include "bkit/corpus.hpp"
#include "bkit/json_io.hpp"

using namespace bkit;

TEST_CASE("sset json round-trip is bit-exact") {
  auto d2 = standard_simplex(2);
  Json j = sset_to_json(*d2);
  auto back = sset_from_json(j);
  CHECK(*back == *d2);
  CHECK(canonical_dump(sset_to_json(*back)) == canonical_dump(j));

  auto h = horn_inclusion(3, {0, 2}).src;
  Json jh = sset_to_json(*h);
  CHECK(canonical_dump(sset_to_json(*sset_from_json(jh))) == canonical_dump(jh));
}

TEST_CASE("map json round-trip") {
  auto incl = spine_inclusion(2);
  Json j = map_assign_to_json(incl);
  auto back = map_from_json(j, incl.src, incl.tgt);
  CHECK(back == incl);
}

TEST_CASE("cat json round-trip") {
  for (const char* name : {"chain3", "diamond", "z3", "walking_iso"}) {
    auto c = corpus().get(name);
    Json j = cat_to_json(*c);
    auto back = cat_from_json(j);
    CHECK(*back == *c);
  }
}

TEST_CASE("corpus data files match the in-code builders") {
  CHECK(corpus().version == "1");
  CHECK(*corpus().get("chain4") == *make_chain(4));
  CHECK(*corpus().get("diamond") == *make_diamond());
  CHECK(*corpus().get("z2") == *make_cyclic(2));
  CHECK(*corpus().get("z3") == *make_cyclic(3));
  CHECK(*corpus().get("walking_iso") == *make_walking_iso());
}
