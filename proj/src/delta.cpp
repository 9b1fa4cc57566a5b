#include "bkit/delta.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkit {

DeltaMorphism DeltaMorphism::identity(int n) {
  DeltaMorphism f;
  f.source = f.target = n;
  f.table.resize(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) f.table[static_cast<size_t>(k)] = k;
  return f;
}

DeltaMorphism DeltaMorphism::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("coface: bad index");
  DeltaMorphism f;
  f.source = n - 1;
  f.target = n;
  for (int k = 0; k <= n - 1; ++k) f.table.push_back(k < i ? k : k + 1);
  return f;
}

DeltaMorphism DeltaMorphism::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("codegeneracy: bad index");
  DeltaMorphism f;
  f.source = n + 1;
  f.target = n;
  for (int k = 0; k <= n + 1; ++k) f.table.push_back(k <= i ? k : k - 1);
  return f;
}

DeltaMorphism DeltaMorphism::constant(int m, int n, int v) {
  DeltaMorphism f;
  f.source = m;
  f.target = n;
  f.table.assign(static_cast<size_t>(m) + 1, v);
  return f;
}

bool DeltaMorphism::is_identity() const {
  if (source != target) return false;
  for (int k = 0; k <= source; ++k)
    if (table[static_cast<size_t>(k)] != k) return false;
  return true;
}

bool DeltaMorphism::is_mono() const {
  for (size_t k = 1; k < table.size(); ++k)
    if (table[k] <= table[k - 1]) return false;
  return true;
}

bool DeltaMorphism::is_epi() const {
  std::vector<bool> hit(static_cast<size_t>(target) + 1, false);
  for (int v : table) hit[static_cast<size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

void DeltaMorphism::validate() const {
  if (source < 0 || target < 0 || table.size() != static_cast<size_t>(source) + 1)
    throw std::invalid_argument("DeltaMorphism: bad arity");
  for (size_t k = 0; k < table.size(); ++k) {
    if (table[k] < 0 || table[k] > target)
      throw std::invalid_argument("DeltaMorphism: value out of range");
    if (k > 0 && table[k] < table[k - 1])
      throw std::invalid_argument("DeltaMorphism: not monotone");
  }
}

std::string DeltaMorphism::str() const {
  std::string s = "[";
  for (size_t k = 0; k < table.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(table[k]);
  }
  s += "]:" + std::to_string(source) + "->" + std::to_string(target);
  return s;
}

DeltaMorphism compose(const DeltaMorphism& g, const DeltaMorphism& f) {
  if (f.target != g.source) throw std::invalid_argument("compose: arity mismatch");
  DeltaMorphism h;
  h.source = f.source;
  h.target = g.target;
  for (int v : f.table) h.table.push_back(g.table[static_cast<size_t>(v)]);
  return h;
}

DeltaMorphism opposite_morphism(const DeltaMorphism& f) {
  DeltaMorphism g;
  g.source = f.source;
  g.target = f.target;
  for (int k = 0; k <= f.source; ++k)
    g.table.push_back(f.target - f.table[static_cast<size_t>(f.source - k)]);
  return g;
}

int join_objects(int m, int n) { return m + n + 1; }

DeltaMorphism join_morphisms(const DeltaMorphism& f, const DeltaMorphism& g) {
  DeltaMorphism h;
  h.source = join_objects(f.source, g.source);
  h.target = join_objects(f.target, g.target);
  h.table = f.table;
  for (int v : g.table) h.table.push_back(v + f.target + 1);
  return h;
}

DeltaMorphism section_of_epi(const DeltaMorphism& f) {
  if (!f.is_epi()) throw std::invalid_argument("section_of_epi: not an epi");
  DeltaMorphism s;
  s.source = f.target;
  s.target = f.source;
  for (int v = 0; v <= f.target; ++v) {
    int k = 0;
    while (f.table[static_cast<size_t>(k)] != v) ++k;
    s.table.push_back(k);
  }
  return s;
}

EpiMonoFactors factor_epi_mono(const DeltaMorphism& f) {
  EpiMonoFactors out;
  std::vector<bool> hit(static_cast<size_t>(f.target) + 1, false);
  for (int v : f.table) hit[static_cast<size_t>(v)] = true;
  for (int v = f.target; v >= 0; --v)
    if (!hit[static_cast<size_t>(v)]) out.missed.push_back(v);
  for (int k = 0; k + 1 <= f.source; ++k)
    if (f.table[static_cast<size_t>(k)] == f.table[static_cast<size_t>(k) + 1])
      out.repeated.push_back(k);
  return out;
}

std::vector<DeltaMorphism> all_monotone_maps(int m, int n) {
  std::vector<DeltaMorphism> out;
  DeltaMorphism f;
  f.source = m;
  f.target = n;
  f.table.assign(static_cast<size_t>(m) + 1, 0);
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos > m) {
      out.push_back(f);
      return;
    }
    for (int v = low; v <= n; ++v) {
      f.table[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

int eval_endoword_object(const EndoWord& w, int n) {
  if (w.empty()) throw std::invalid_argument("eval_endoword_object: empty word");
  int total = -1;  // join of k values has k-1 added separators
  for (EndoLetter l : w) total += 1 + (l == EndoLetter::Kappa ? 0 : n);
  return total;
}

static DeltaMorphism eval_letter(EndoLetter l, const DeltaMorphism& f) {
  switch (l) {
    case EndoLetter::Id: return f;
    case EndoLetter::Op: return opposite_morphism(f);
    case EndoLetter::Kappa: return DeltaMorphism::identity(0);
  }
  throw std::logic_error("eval_letter");
}

DeltaMorphism eval_endoword(const EndoWord& w, const DeltaMorphism& f) {
  if (w.empty()) throw std::invalid_argument("eval_endoword: empty word");
  DeltaMorphism acc = eval_letter(w[0], f);
  for (size_t k = 1; k < w.size(); ++k) acc = join_morphisms(acc, eval_letter(w[k], f));
  return acc;
}

std::string endoword_str(const EndoWord& w) {
  std::string s;
  for (EndoLetter l : w) {
    if (!s.empty()) s += "*";
    s += (l == EndoLetter::Id ? "id" : l == EndoLetter::Op ? "op" : "k");
  }
  return s;
}

std::vector<EndoWord> all_endowords(int max_len) {
  std::vector<EndoWord> out;
  std::vector<EndoWord> layer = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<EndoWord> next;
    for (const auto& w : layer)
      for (EndoLetter l : {EndoLetter::Id, EndoLetter::Op, EndoLetter::Kappa}) {
        EndoWord w2 = w;
        w2.push_back(l);
        next.push_back(w2);
      }
    for (const auto& w : next) out.push_back(w);
    layer = std::move(next);
  }
  return out;
}

std::optional<FreenessWitness> distinct_words_witness(const EndoWord& w1,
                                                      const EndoWord& w2,
                                                      int bound) {
  if (w1 == w2) return std::nullopt;
  for (int n = 0; n <= bound; ++n) {
    if (eval_endoword_object(w1, n) != eval_endoword_object(w2, n)) {
      FreenessWitness wit;
      wit.object_disagreement = true;
      wit.object_arity = n;
      return wit;
    }
  }
  // Generating morphisms: all cofaces and codegeneracies with arities <= bound.
  std::vector<DeltaMorphism> gens;
  for (int n = 1; n <= bound; ++n)
    for (int i = 0; i <= n; ++i) gens.push_back(DeltaMorphism::coface(n, i));
  for (int n = 0; n + 1 <= bound; ++n)
    for (int i = 0; i <= n; ++i) gens.push_back(DeltaMorphism::codegeneracy(n, i));
  for (const auto& g : gens) {
    if (eval_endoword(w1, g) != eval_endoword(w2, g)) {
      FreenessWitness wit;
      wit.morphism = g;
      return wit;
    }
  }
  return std::nullopt;
}

}  // namespace bkit
