// Machine-checkable certificates that a monomorphism belongs to a saturated
// class: trees of generator instances, pushouts, compositions, isomorphism
// transports and right-cancellations, each node verified against the actual
// colimits.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bkit/marked.hpp"

namespace bkit {

enum class Flavor { Plain, Marked, Marbled };

// maps compared by structure, not by object identity
bool maps_equal(const SimplicialMap& f, const SimplicialMap& g);
bool marbled_equal(const MarbledSSet& a, const MarbledSSet& b, Flavor flavor);
bool is_flavored_iso(const SimplicialMap& f, const MarbledSSet& src,
                     const MarbledSSet& tgt, Flavor flavor);

struct CertMap {
  MarbledSSet src;
  MarbledSSet tgt;
  SimplicialMap map;
};

struct GenInstance {
  std::string kind;  // spine | spine_l | horn | horn_l | sharp_horn21 | blaze_fill
  int n = 0;
  int k = 0;
  friend bool operator==(const GenInstance&, const GenInstance&) = default;
};

struct ClassSpec {
  Flavor flavor = Flavor::Plain;
  std::string family;  // spine_i1_i2 | inner_horns | joyal | marked_spine_i1_i2 | marbled_anodyne
  bool right_cancel = false;
};

ClassSpec spec_lm16();             // plain spines + the two left horns, right cancel
ClassSpec spec_inner_horns();      // plain inner horns, no right cancel
ClassSpec spec_joyal();            // spines + inner horns, right cancel
ClassSpec spec_lm314();            // marked spines (l and flat) + marked left horns
ClassSpec spec_marbled_anodyne();  // the marbled generator family

bool generator_allowed(const ClassSpec& spec, const GenInstance& g);
CertMap build_generator(const GenInstance& g, Flavor flavor);

struct Certificate {
  enum class Kind { Generator, Pushout, Compose, IsoTransport, RightCancel };
  Kind kind = Kind::Compose;
  CertMap subject;
  GenInstance gen;                                      // Generator
  std::vector<std::shared_ptr<Certificate>> children;   // see node docs
  SimplicialMap attach;                                 // Pushout
  SimplicialMap filler;                                 // Pushout
  SimplicialMap src_iso, tgt_iso;                       // IsoTransport
};

using CertPtr2 = std::shared_ptr<Certificate>;

struct VerifyResult {
  bool ok = false;
  std::string path;  // node path of the first failure
  std::string message;
};

VerifyResult verify_certificate(const Certificate& c, const ClassSpec& spec);

// counts the attached generator cells in a certificate
long certificate_cells(const Certificate& c);

// ---- builders -------------------------------------------------------------------

// [J^n -> Lambda^n_S] by the double induction, for {0} <= S < {0,2,...,n}.
Certificate cert_J_to_horn(int n, const std::vector<int>& S, Flavor flavor);
// [J^n -> Delta^n]
Certificate cert_J_to_delta(int n, Flavor flavor);
// [Lambda^n_0 -> Delta^n] from spines and the two low horns by right cancel
Certificate cert_left_horn(int n, Flavor flavor);

// Pushout-corner certificates for the left Kan extension argument.
struct Pr11Result {
  Certificate canonical;   // [U -> Delta^{2n+1}], [I^3 -> Delta^3] or [V -> Delta^5]
  Certificate transported; // subject is the actual corner map
  SimplicialMap corner;
};
Pr11Result cert_pr11(const std::string& which);  // "s2" | "s3" | "i1" | "i2"

// Greedy cell-attachment search for a filtration by generator pushouts.
std::optional<Certificate> find_cell_decomposition(const SimplicialMap& incl,
                                                   const MarbledSSet& src,
                                                   const MarbledSSet& tgt,
                                                   const ClassSpec& spec, long budget);

// The three-step factorization certificate for F of the spine inclusion.
Certificate cert_marbled_spine(int n, long budget = 96);

// intermediate stages, exposed for inspection and tests
struct MarbledSpineStages {
  std::vector<CellSet> stage_cells;  // within f_delta(n): source, t1, t2, full
};
MarbledSpineStages marbled_spine_stages(int n);

}  // namespace bkit
