// The fixed corpus of test categories, shipped as data files: chain posets,
// the diamond lattice, small cyclic groups, and the walking isomorphism.
#pragma once

#include <string>
#include <vector>

#include "bkit/cat.hpp"

namespace bkit {

// In-code builders (also used to regenerate the data files).
CatPtr make_chain(int n);        // poset 0 < 1 < ... < n-1
CatPtr make_diamond();           // subset lattice of {1,2}
CatPtr make_cyclic(int n);       // one-object group Z/n
CatPtr make_walking_iso();

struct CorpusEntry {
  std::string name;
  CatPtr cat;
  bool has_pullbacks = false;  // full triple adequate
};

struct Corpus {
  std::string version;
  std::vector<CorpusEntry> entries;
  CatPtr get(const std::string& name) const;
};

// Loads data/corpus/*.json; throws when the directory is missing or invalid.
const Corpus& corpus();
std::string corpus_dir();

// Regenerates the data files from the in-code builders.
void write_corpus_files(const std::string& dir);

}  // namespace bkit
