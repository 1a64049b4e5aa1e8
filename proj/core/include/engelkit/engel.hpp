#pragma once

#include <optional>
#include <string>
#include <vector>

#include "engelkit/bigint.hpp"
#include "engelkit/magnus.hpp"
#include "engelkit/words.hpp"
#include "engelkit/zlattice.hpp"

namespace engelkit {

// An instance [w, w^v] of the relation that makes every element commute
// with its own conjugates.
struct EngelInstance {
  Word base;        // w
  Word conjugator;  // v
  Word word;        // [w, w^v], freely reduced
};

// Deterministic enumeration over all reduced words w, v of length <= depth,
// deduplicated by the reduced instance word; freely trivial instances are
// dropped. Every returned word lies in the third lower central term.
std::vector<EngelInstance> engel_instances(int n, int depth);

struct CertFactor {
  Word instance;    // an enumerated instance word
  Word conjugator;  // empty or a single generator
  Int exponent;
};

// target = product of conjugated instance powers, as an exact identity of
// Magnus expansions at truncation degree 4 (i.e. modulo the fifth lower
// central term).
struct EngelCertificate {
  Word target;
  std::vector<CertFactor> factors;
  bool verified = false;
  int depth_used = 0;
};

// Re-multiplies the certificate through `expand` only; independent of the
// lattice solver that produced it.
bool verify_certificate(const EngelCertificate& cert, int n);

// Per-degree slices of the relation machinery: for each degree d <= 4 the
// integer lattice spanned by degree-d instance data after elimination of
// lower-degree content, in monomial coordinates (row HNF). Degrees 1 and 2
// are empty by construction.
struct GradedPresentation {
  int n = 0;
  int depth = 0;
  // relation_lattice[d] has n^d columns; rows form the lattice basis.
  std::vector<IntMatrix> relation_lattice;  // index 0 unused, 1..4
};

GradedPresentation build_graded_presentation(int n, int depth);

// Degree-3 coordinates of the full polarized relation lattice, independent
// of enumeration depth. Spanned by [a,[a,b]] and [a,[b,c]] + [b,[a,c]] over
// generators; sound for nontriviality verdicts at any depth.
EchelonLattice degree3_relation_lattice(int n);

struct Class3Target {
  std::vector<int> indices;  // (a,b,c,d)
  Word word;                 // left-normed commutator
  std::optional<EngelCertificate> certificate;
};

struct Class3Report {
  int n = 0;
  int depth = 0;
  bool complete = false;  // every target certified and verified
  std::vector<Class3Target> targets;
};

// Certificates for all left-normed 4-fold generator commutators, searched
// at increasing instance depth up to `depth`; each certificate records the
// first depth that sufficed. Targets left uncertified mark the report
// incomplete ("insufficient depth").
Class3Report certify_class3(int n, int depth);

enum class EngelTriviality { CertifiedTrivial, Nontrivial, UnknownAtDepth };

struct EngelObstruction {
  int degree = 0;
  Monomial monomial;  // a surviving coordinate of the quotient residue
  Int coefficient;
};

struct EngelDecision {
  EngelTriviality kind = EngelTriviality::UnknownAtDepth;
  std::optional<EngelCertificate> certificate;   // CertifiedTrivial
  std::optional<EngelObstruction> obstruction;   // Nontrivial
};

// Decides triviality in the 2-Engel quotient modulo the fifth lower central
// term. Certified-trivial always carries a re-checkable certificate;
// nontrivial always carries a surviving coefficient.
EngelDecision is_trivial_engel(const Word& w, int n, int depth);

inline constexpr int kDefaultEngelDepth = 3;

}  // namespace engelkit
