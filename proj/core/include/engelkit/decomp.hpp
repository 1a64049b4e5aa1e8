#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "engelkit/bigint.hpp"
#include "engelkit/words.hpp"

namespace engelkit {

// A 4-fold left-normed commutator in which two slots hold the same ordered
// product of two distinct generators and the other slots hold single
// generators. The slot count is carried so a longer-commutator extension
// stays additive.
struct ElementaryCommutator {
  int k = 4;
  std::array<int, 4> single{};        // generator id per slot, 0 on product slots
  std::pair<int, int> product{};      // (first, second) generator of the pair
  std::pair<int, int> positions{};    // the two product slots, 0-based, first < second
  Word word;                          // left-normed realization, freely reduced

  // Slot generators avoid the product pair, i.e. the pair components run
  // parallel in the associated link. Slide and deletion checks require this.
  bool link_realizable() const;
  std::array<Word, 4> slot_words() const;
};

// Deterministic, deduplicated enumeration over generators 1..n; n >= 4.
std::vector<ElementaryCommutator> elementary_commutators(int n);

// Attaching-curve word of a two-stage tower: profile = (g, h_1, ..., h_2g)
// with bottom genus g and one genus per handle curve. Meridians number
// 1..2*sum(h_i); the result is a product of commutators of commutators and
// always lies in the fourth lower central term.
Word attach_curve_word(const std::vector<int>& genus_profile);

struct DecompFactor {
  ElementaryCommutator commutator;
  Int exponent;
};

// gamma = (product of commutator powers) * correction, where the product
// matches gamma's distinct-index degree-4 data and the correction word is
// trivial in the reduced-Magnus model.
struct DecompositionCertificate {
  Word gamma;
  std::vector<DecompFactor> factors;
  Word correction;                 // product^-1 * gamma
  bool correction_trivial = false;
  bool verified = false;
};

struct DecompError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solves the degree-4 distinct-index system over elementary commutators and
// records the Milnor-trivial correction. Throws DecompError when the
// precondition fails, when the integer system has no solution, or when the
// correction survives (which happens only outside the plain-product scope;
// see README).
DecompositionCertificate decompose_gamma(const Word& gamma, int n);

// Same, over a caller-supplied candidate pool. The chosen exponents depend
// on the pool order; the round trip must not.
DecompositionCertificate decompose_gamma(
    const Word& gamma, int n, const std::vector<ElementaryCommutator>& candidates);

// True iff gamma * gamma'^-1 is trivial in the reduced-Magnus model.
bool correction_check(const Word& gamma, const Word& gamma_prime, int n);

}  // namespace engelkit
