#include "bkit/corpus.hpp"

#include <map>
#include <stdexcept>

#include "bkit/json_io.hpp"

namespace bkit {

CatPtr make_chain(int n) {
  auto c = std::make_shared<FiniteCategory>();
  c->n_objects = n;
  for (int a = 0; a < n; ++a) c->object_names.push_back(std::to_string(a));
  std::map<std::pair<int, int>, int> idx;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      idx[{a, b}] = static_cast<int>(c->morphisms.size());
      c->morphisms.push_back({std::to_string(a) + "to" + std::to_string(b), a, b});
    }
  for (int a = 0; a < n; ++a) c->id_of.push_back(idx.at({a, a}));
  c->comp.assign(c->morphisms.size(), std::vector<int>(c->morphisms.size(), -1));
  for (auto& [gp, g] : idx)
    for (auto& [fp, f] : idx)
      if (fp.second == gp.first)
        c->comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = idx.at({fp.first, gp.second});
  c->validate();
  return c;
}

CatPtr make_diamond() {
  // subsets of {1,2} ordered by inclusion: bot < a, b < top
  auto c = std::make_shared<FiniteCategory>();
  c->n_objects = 4;
  c->object_names = {"bot", "a", "b", "top"};
  auto leq = [](int x, int y) {
    // bitmask order: bot=00, a=01, b=10, top=11
    return (x & y) == x;
  };
  std::map<std::pair<int, int>, int> idx;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (leq(x, y)) {
        idx[{x, y}] = static_cast<int>(c->morphisms.size());
        c->morphisms.push_back({c->object_names[static_cast<size_t>(x)] + "to" +
                                    c->object_names[static_cast<size_t>(y)],
                                x, y});
      }
  for (int x = 0; x < 4; ++x) c->id_of.push_back(idx.at({x, x}));
  c->comp.assign(c->morphisms.size(), std::vector<int>(c->morphisms.size(), -1));
  for (auto& [gp, g] : idx)
    for (auto& [fp, f] : idx)
      if (fp.second == gp.first)
        c->comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = idx.at({fp.first, gp.second});
  c->validate();
  return c;
}

CatPtr make_cyclic(int n) {
  auto c = std::make_shared<FiniteCategory>();
  c->n_objects = 1;
  c->object_names = {"x"};
  for (int g = 0; g < n; ++g) c->morphisms.push_back({"g" + std::to_string(g), 0, 0});
  c->id_of = {0};
  c->comp.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      c->comp[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  c->validate();
  return c;
}

CatPtr make_walking_iso() {
  auto c = std::make_shared<FiniteCategory>();
  c->n_objects = 2;
  c->object_names = {"a", "b"};
  c->morphisms = {{"ida", 0, 0}, {"idb", 1, 1}, {"f", 0, 1}, {"finv", 1, 0}};
  c->id_of = {0, 1};
  c->comp.assign(4, std::vector<int>(4, -1));
  auto set = [&](int g, int f, int gf) {
    c->comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = gf;
  };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 0, 2);
  set(1, 2, 2);
  set(3, 1, 3);
  set(0, 3, 3);
  set(3, 2, 0);
  set(2, 3, 1);
  c->validate();
  return c;
}

std::string corpus_dir() { return std::string(BKIT_DATA_DIR) + "/corpus"; }

namespace {

std::vector<std::pair<std::string, CatPtr>> builders() {
  return {{"pt", make_chain(1)},       {"chain2", make_chain(2)},
          {"chain3", make_chain(3)},   {"chain4", make_chain(4)},
          {"diamond", make_diamond()}, {"z2", make_cyclic(2)},
          {"z3", make_cyclic(3)},      {"walking_iso", make_walking_iso()}};
}

}  // namespace

void write_corpus_files(const std::string& dir) {
  Json manifest;
  manifest["schema"] = "corpus/v1";
  manifest["version"] = "1";
  manifest["categories"] = Json::array();
  for (const auto& [name, cat] : builders()) {
    write_file(dir + "/" + name + ".cat.json", cat_to_json(*cat));
    manifest["categories"].push_back(name);
  }
  write_file(dir + "/manifest.json", manifest);
}

const Corpus& corpus() {
  static Corpus c = [] {
    Corpus out;
    Json manifest = parse_file(corpus_dir() + "/manifest.json");
    out.version = manifest.at("version").get<std::string>();
    for (const auto& name : manifest.at("categories")) {
      CorpusEntry e;
      e.name = name.get<std::string>();
      e.cat = cat_from_json(parse_file(corpus_dir() + "/" + e.name + ".cat.json"));
      // meet-semilattices and groupoids in this corpus all admit the needed
      // pullbacks; record which entries carry an adequate full triple
      e.has_pullbacks = true;
      out.entries.push_back(std::move(e));
    }
    return out;
  }();
  return c;
}

CatPtr Corpus::get(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.cat;
  throw std::runtime_error("corpus: unknown category " + name);
}

}  // namespace bkit
