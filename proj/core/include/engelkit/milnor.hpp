#pragma once

#include <string>
#include <vector>

#include "engelkit/magnus.hpp"
#include "engelkit/words.hpp"

namespace engelkit {

// Free Milnor group on n generators, modeled operationally: two words are
// equal iff their reduced Magnus expansions agree. Triviality verdicts are
// certificates in this representation; nontriviality verdicts are
// unconditional (see the module docs in README).
struct MilnorContext {
  int n = 0;
  explicit MilnorContext(int num_generators) : n(num_generators) {}
};

// True iff reduced_expand(w, n) = 1.
bool is_trivial_mf(const Word& w, int n);
bool is_trivial_mf(const Word& w, const MilnorContext& ctx);

// True iff u v^-1 is trivial.
bool equal_mf(const Word& u, const Word& v, int n);
bool equal_mf(const Word& u, const Word& v, const MilnorContext& ctx);

// Raw series access so stricter models can be swapped in on top.
ReducedSeries milnor_image(const Word& w, int n);

// Nilpotency-class probe: [m1,...,mn] survives while sampled (n+1)-fold
// generator commutators die.
struct ClassProbeReport {
  int n = 0;
  Word witness;                     // left-normed [m1,...,mn]
  bool witness_nontrivial = false;
  int checked = 0;                  // (n+1)-fold commutators tested
  int trivial = 0;
  bool exhaustive = false;
  bool passed = false;
  std::vector<Word> failures;
};

// Exhausts all (n+1)-index tuples for n <= 3; samples `sample_count`
// deterministic tuples above that.
ClassProbeReport milnor_class_probe(int n, int sample_count = 200,
                                    unsigned long long seed = 7);

}  // namespace engelkit
