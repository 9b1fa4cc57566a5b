#include "bkit/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace bkit {

Json sset_to_json(const SimplicialSet& s) {
  Json out;
  out["schema"] = "sset/v1";
  out["dims"] = Json::array();
  for (int d = 0; d <= s.dim_bound(); ++d) {
    Json level;
    level["d"] = d;
    level["simplices"] = Json::array();
    for (int k = 0; k < s.count(d); ++k) {
      const auto& sx = s.simplex({d, k});
      Json rec;
      rec["id"] = sx.name;
      rec["faces"] = Json::array();
      for (const auto& f : sx.faces) {
        Json fr;
        fr["word"] = f.word.idx;
        fr["target"] = s.simplex(f.target).name;
        rec["faces"].push_back(fr);
      }
      level["simplices"].push_back(rec);
    }
    out["dims"].push_back(level);
  }
  return out;
}

SSetPtr sset_from_json(const Json& j) {
  auto s = std::make_shared<SimplicialSet>();
  if (!j.contains("dims")) throw std::runtime_error("sset/v1: missing dims");
  for (const auto& level : j.at("dims")) {
    int d = level.at("d").get<int>();
    for (const auto& rec : level.at("simplices")) {
      std::vector<SimplexRef> faces;
      for (const auto& fr : rec.at("faces")) {
        SimplexRef r;
        for (const auto& w : fr.at("word")) r.word.idx.push_back(w.get<int>());
        int tdim = d - 1 - static_cast<int>(r.word.idx.size());
        int tk = s->find(tdim, fr.at("target").get<std::string>());
        if (tk < 0) throw std::runtime_error("sset/v1: dangling face target");
        r.target = {tdim, tk};
        faces.push_back(std::move(r));
      }
      s->add_simplex(d, rec.at("id").get<std::string>(), std::move(faces));
    }
  }
  s->validate();
  return s;
}

Json map_assign_to_json(const SimplicialMap& f) {
  Json out;
  out["assign"] = Json::array();
  for (int d = 0; d <= f.src->dim_bound(); ++d)
    for (int k = 0; k < f.src->count(d); ++k) {
      const SimplexRef& img = f.assign[static_cast<size_t>(d)][static_cast<size_t>(k)];
      Json rec;
      rec["src"] = f.src->simplex({d, k}).name;
      rec["word"] = img.word.idx;
      rec["target"] = f.tgt->simplex(img.target).name;
      out["assign"].push_back(rec);
    }
  return out;
}

SimplicialMap map_from_json(const Json& j, SSetPtr src, SSetPtr tgt) {
  SimplicialMap f;
  f.src = src;
  f.tgt = tgt;
  f.assign.resize(static_cast<size_t>(src->dim_bound()) + 1);
  for (size_t d = 0; d < f.assign.size(); ++d)
    f.assign[d].assign(static_cast<size_t>(src->count(static_cast<int>(d))),
                       SimplexRef{{}, {-1, -1}});
  for (const auto& rec : j.at("assign")) {
    std::string name = rec.at("src").get<std::string>();
    int sd = -1, sk = -1;
    for (int d = 0; d <= src->dim_bound() && sk < 0; ++d) {
      sk = src->find(d, name);
      if (sk >= 0) sd = d;
    }
    if (sk < 0) throw std::runtime_error("map: unknown source simplex " + name);
    SimplexRef img;
    for (const auto& w : rec.at("word")) img.word.idx.push_back(w.get<int>());
    int tdim = sd - static_cast<int>(img.word.idx.size());
    int tk = tgt->find(tdim, rec.at("target").get<std::string>());
    if (tk < 0) throw std::runtime_error("map: unknown target simplex");
    img.target = {tdim, tk};
    f.assign[static_cast<size_t>(sd)][static_cast<size_t>(sk)] = img;
  }
  f.validate();
  return f;
}

Json cat_to_json(const FiniteCategory& c) {
  Json out;
  out["schema"] = "cat/v1";
  out["objects"] = c.object_names;
  out["morphisms"] = Json::array();
  for (const auto& m : c.morphisms) {
    Json rec;
    rec["id"] = m.name;
    rec["src"] = c.object_names[static_cast<size_t>(m.src)];
    rec["tgt"] = c.object_names[static_cast<size_t>(m.tgt)];
    out["morphisms"].push_back(rec);
  }
  out["compose"] = Json::array();
  for (size_t g = 0; g < c.morphisms.size(); ++g)
    for (size_t f = 0; f < c.morphisms.size(); ++f) {
      if (c.comp[g][f] < 0) continue;
      out["compose"].push_back(Json::array(
          {c.morphisms[g].name, c.morphisms[f].name,
           c.morphisms[static_cast<size_t>(c.comp[g][f])].name}));
    }
  out["ids"] = Json::object();
  for (int a = 0; a < c.n_objects; ++a)
    out["ids"][c.object_names[static_cast<size_t>(a)]] =
        c.morphisms[static_cast<size_t>(c.id_of[static_cast<size_t>(a)])].name;
  return out;
}

CatPtr cat_from_json(const Json& j) {
  auto c = std::make_shared<FiniteCategory>();
  for (const auto& name : j.at("objects")) {
    c->object_names.push_back(name.get<std::string>());
    ++c->n_objects;
  }
  auto ob = [&](const std::string& name) {
    for (int a = 0; a < c->n_objects; ++a)
      if (c->object_names[static_cast<size_t>(a)] == name) return a;
    throw std::runtime_error("cat/v1: unknown object " + name);
  };
  for (const auto& rec : j.at("morphisms"))
    c->morphisms.push_back({rec.at("id").get<std::string>(),
                            ob(rec.at("src").get<std::string>()),
                            ob(rec.at("tgt").get<std::string>())});
  auto mor = [&](const std::string& name) {
    int m = c->find_morphism(name);
    if (m < 0) throw std::runtime_error("cat/v1: unknown morphism " + name);
    return m;
  };
  c->comp.assign(c->morphisms.size(), std::vector<int>(c->morphisms.size(), -1));
  for (const auto& rec : j.at("compose"))
    c->comp[static_cast<size_t>(mor(rec.at(0).get<std::string>()))]
           [static_cast<size_t>(mor(rec.at(1).get<std::string>()))] =
        mor(rec.at(2).get<std::string>());
  c->id_of.assign(static_cast<size_t>(c->n_objects), -1);
  for (auto it = j.at("ids").begin(); it != j.at("ids").end(); ++it)
    c->id_of[static_cast<size_t>(ob(it.key()))] = mor(it.value().get<std::string>());
  c->validate();
  return c;
}

std::string canonical_dump(const Json& j) { return j.dump(1) + "\n"; }

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << canonical_dump(j);
}

}  // namespace bkit
