// JSON schemas: sset/v1 for simplicial sets, cat/v1 for finite categories,
// plus map records. Round-trips are bit-exact through canonical_dump.
#pragma once

#include <string>

#include "json.hpp"

#include "bkit/cat.hpp"
#include "bkit/smap.hpp"

namespace bkit {

using Json = nlohmann::ordered_json;

Json sset_to_json(const SimplicialSet& s);
SSetPtr sset_from_json(const Json& j);

Json map_assign_to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j, SSetPtr src, SSetPtr tgt);

Json cat_to_json(const FiniteCategory& c);
CatPtr cat_from_json(const Json& j);

std::string canonical_dump(const Json& j);
Json parse_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace bkit
