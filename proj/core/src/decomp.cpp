#include "engelkit/decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "engelkit/magnus.hpp"
#include "engelkit/milnor.hpp"
#include "engelkit/zlattice.hpp"

namespace engelkit {

bool ElementaryCommutator::link_realizable() const {
  for (int s : single)
    if (s == product.first || s == product.second) return false;
  return true;
}

std::array<Word, 4> ElementaryCommutator::slot_words() const {
  std::array<Word, 4> out;
  for (int pos = 0; pos < 4; ++pos) {
    if (pos == positions.first || pos == positions.second) {
      out[static_cast<std::size_t>(pos)] =
          Word::generator(product.first) * Word::generator(product.second);
    } else {
      out[static_cast<std::size_t>(pos)] =
          Word::generator(single[static_cast<std::size_t>(pos)]);
    }
  }
  return out;
}

std::vector<ElementaryCommutator> elementary_commutators(int n) {
  if (n < 4) throw std::invalid_argument("elementary commutators need n >= 4");
  std::vector<ElementaryCommutator> out;
  std::set<Word> seen;
  for (int j = 0; j < 4; ++j)
    for (int m = j + 1; m < 4; ++m)
      for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
          if (p == q) continue;
          std::vector<int> free_slots;
          for (int pos = 0; pos < 4; ++pos)
            if (pos != j && pos != m) free_slots.push_back(pos);
          for (int s0 = 1; s0 <= n; ++s0)
            for (int s1 = 1; s1 <= n; ++s1) {
              ElementaryCommutator c;
              c.positions = {j, m};
              c.product = {p, q};
              c.single[static_cast<std::size_t>(free_slots[0])] = s0;
              c.single[static_cast<std::size_t>(free_slots[1])] = s1;
              auto slots = c.slot_words();
              c.word = left_normed_commutator(slots);
              if (c.word.empty() || !seen.insert(c.word).second) continue;
              out.push_back(std::move(c));
            }
        }
  return out;
}

Word attach_curve_word(const std::vector<int>& genus_profile) {
  if (genus_profile.empty()) throw std::invalid_argument("empty genus profile");
  int g = genus_profile[0];
  if (g < 1) throw std::invalid_argument("bottom genus must be >= 1");
  if (static_cast<int>(genus_profile.size()) != 1 + 2 * g)
    throw std::invalid_argument("profile needs one genus per handle curve (2g entries)");
  int total = 0;
  for (std::size_t i = 1; i < genus_profile.size(); ++i) {
    if (genus_profile[i] < 1) throw std::invalid_argument("handle genus must be >= 1");
    total += 2 * genus_profile[i];
  }
  if (total > 8)
    throw std::invalid_argument("meridian count beyond supported scope (max 8)");

  int next = 1;
  std::vector<Word> handle_words;
  for (std::size_t i = 1; i < genus_profile.size(); ++i) {
    Word acc;
    for (int l = 0; l < genus_profile[i]; ++l) {
      acc = acc * commutator(Word::generator(next), Word::generator(next + 1));
      next += 2;
    }
    handle_words.push_back(acc);
  }
  Word gamma;
  for (int j = 0; j < g; ++j)
    gamma = gamma * commutator(handle_words[static_cast<std::size_t>(2 * j)],
                               handle_words[static_cast<std::size_t>(2 * j + 1)]);
  return gamma;
}

namespace {

// Columns: distinct-index degree-4 monomials over 1..n in (degree, lex) order.
std::map<Monomial, int, MonomialOrder> degree4_columns(int n) {
  std::map<Monomial, int, MonomialOrder> cols;
  Monomial m(4);
  int next = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == 4) {
      cols.emplace(m, next++);
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (std::find(m.begin(), m.begin() + pos, i) != m.begin() + pos) continue;
      m[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return cols;
}

SparseRow degree4_row(const ReducedSeries& s,
                      const std::map<Monomial, int, MonomialOrder>& cols) {
  SparseRow row;
  for (const auto& [m, c] : s.terms()) {
    if (m.size() != 4) continue;
    row.emplace_back(cols.at(m), c);
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::array<int, 4> support_of(const ElementaryCommutator& c) {
  std::set<int> vars{c.product.first, c.product.second};
  for (int s : c.single)
    if (s != 0) vars.insert(s);
  std::array<int, 4> out{};
  int i = 0;
  for (int v : vars) {
    if (i < 4) out[static_cast<std::size_t>(i)] = v;
    ++i;
  }
  return out;
}

}  // namespace

DecompositionCertificate decompose_gamma(const Word& gamma, int n) {
  return decompose_gamma(gamma, n, elementary_commutators(n));
}

DecompositionCertificate decompose_gamma(
    const Word& gamma, int n, const std::vector<ElementaryCommutator>& candidates) {
  if (n < 4 || n > 8)
    throw std::invalid_argument("decompose_gamma supports 4 <= n <= 8");
  if (max_generator(gamma) > n)
    throw std::invalid_argument("word uses generators beyond the context");
  auto low = lcs_degree(gamma, 4);
  if (low && *low < 4)
    throw DecompError("gamma has nonzero Magnus data below degree 4");

  DecompositionCertificate cert;
  cert.gamma = gamma;
  if (gamma.empty()) {
    cert.correction_trivial = true;
    cert.verified = true;
    return cert;
  }

  auto cols = degree4_columns(n);
  EchelonLattice lattice(/*track_provenance=*/true);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    SparseRow row = degree4_row(reduced_expand(candidates[i].word, n), cols);
    if (row.empty()) continue;
    lattice.insert(std::move(row), static_cast<int>(i));
  }

  SparseRow target = degree4_row(reduced_expand(gamma, n), cols);
  auto combo = lattice.express(target);
  if (!combo)
    throw DecompError(
        "degree-4 system unsolvable over elementary commutators; this "
        "contradicts the decomposition guarantee for in-scope inputs");

  for (const auto& [id, coef] : *combo)
    cert.factors.push_back({candidates[static_cast<std::size_t>(id)], coef});

  // Canonical product order: group by variable support so that cross terms
  // between disjoint blocks line up with constructor output.
  std::stable_sort(cert.factors.begin(), cert.factors.end(),
                   [](const DecompFactor& a, const DecompFactor& b) {
                     return support_of(a.commutator) < support_of(b.commutator);
                   });

  Word product;
  for (const DecompFactor& f : cert.factors) {
    long long e = f.exponent.convert_to<long long>();
    product = product * f.commutator.word.pow(e);
  }
  cert.correction = product.inverse() * gamma;
  cert.correction_trivial = is_trivial_mf(cert.correction, n);
  cert.verified =
      cert.correction_trivial && equal_mf(gamma, product * cert.correction, n);
  if (!cert.correction_trivial)
    throw DecompError(
        "correction word survives in the reduced-Magnus model; the "
        "plain-product scope does not cover this input (see README)");
  return cert;
}

bool correction_check(const Word& gamma, const Word& gamma_prime, int n) {
  return is_trivial_mf(gamma * gamma_prime.inverse(), n);
}

}  // namespace engelkit
