// The simplex category: monotone maps between finite ordinals, the join,
// and the endofunctor semigroup generated by the identity, order reversal,
// and the constant functor at [0].
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bkit {

// A monotone map [m] -> [n], stored as its value table of length m+1.
struct DeltaMorphism {
  int source = 0;  // arity m
  int target = 0;  // arity n
  std::vector<int> table;

  static DeltaMorphism identity(int n);
  static DeltaMorphism coface(int n, int i);        // d_i : [n-1] -> [n]
  static DeltaMorphism codegeneracy(int n, int i);  // s_i : [n+1] -> [n]
  static DeltaMorphism constant(int m, int n, int v);

  int operator()(int k) const { return table[static_cast<size_t>(k)]; }
  bool is_identity() const;
  bool is_mono() const;
  bool is_epi() const;
  void validate() const;  // throws on non-monotone / out-of-range tables
  std::string str() const;

  friend bool operator==(const DeltaMorphism&, const DeltaMorphism&) = default;
};

// g after f.
DeltaMorphism compose(const DeltaMorphism& g, const DeltaMorphism& f);

// Order reversal: op(f)(k) = n - f(m - k).
DeltaMorphism opposite_morphism(const DeltaMorphism& f);

// [m] * [n] = [m + n + 1]; on morphisms, block concatenation.
int join_objects(int m, int n);
DeltaMorphism join_morphisms(const DeltaMorphism& f, const DeltaMorphism& g);

// A monotone section of an epimorphism (chooses the least preimage).
DeltaMorphism section_of_epi(const DeltaMorphism& f);

// Epi-mono factorization data for the simplicial-operator calculus:
// f = d_{i_1} ... d_{i_s} s_{j_1} ... s_{j_t} with i_1 > ... > i_s the
// values missed by f and j_1 < ... < j_t the positions where f repeats.
struct EpiMonoFactors {
  std::vector<int> missed;    // descending
  std::vector<int> repeated;  // ascending
};
EpiMonoFactors factor_epi_mono(const DeltaMorphism& f);

std::vector<DeltaMorphism> all_monotone_maps(int m, int n);

// ---- End(Delta) words over {id, op, kappa} -------------------------------

enum class EndoLetter { Id, Op, Kappa };

using EndoWord = std::vector<EndoLetter>;

inline EndoWord epsilon_word() { return {EndoLetter::Op, EndoLetter::Id}; }

int eval_endoword_object(const EndoWord& w, int n);
DeltaMorphism eval_endoword(const EndoWord& w, const DeltaMorphism& f);

std::string endoword_str(const EndoWord& w);
std::vector<EndoWord> all_endowords(int max_len);

// Bounded freeness check: searches objects and generating morphisms of
// arity <= bound for a disagreement of the two induced endofunctors.
// Returns a witness morphism, or nullopt when the words are equal as words
// or no disagreement exists within the bound.
struct FreenessWitness {
  bool object_disagreement = false;
  int object_arity = -1;
  std::optional<DeltaMorphism> morphism;
};
std::optional<FreenessWitness> distinct_words_witness(const EndoWord& w1,
                                                      const EndoWord& w2,
                                                      int bound);

}  // namespace bkit
