#include "engelkit/milnor.hpp"

#include <random>
#include <stdexcept>

namespace engelkit {

bool is_trivial_mf(const Word& w, int n) {
  if (max_generator(w) > n)
    throw std::invalid_argument("word uses generators beyond the context");
  return reduced_expand(w, n).is_one();
}

bool is_trivial_mf(const Word& w, const MilnorContext& ctx) {
  return is_trivial_mf(w, ctx.n);
}

bool equal_mf(const Word& u, const Word& v, int n) {
  return is_trivial_mf(u * v.inverse(), n);
}

bool equal_mf(const Word& u, const Word& v, const MilnorContext& ctx) {
  return equal_mf(u, v, ctx.n);
}

ReducedSeries milnor_image(const Word& w, int n) { return reduced_expand(w, n); }

namespace {

Word left_normed_of_indices(const std::vector<int>& idx) {
  std::vector<Word> parts;
  parts.reserve(idx.size());
  for (int i : idx) parts.push_back(Word::generator(i));
  return left_normed_commutator(parts);
}

}  // namespace

ClassProbeReport milnor_class_probe(int n, int sample_count,
                                    unsigned long long seed) {
  if (n < 1 || n > 5) throw std::invalid_argument("class probe supports 1 <= n <= 5");
  ClassProbeReport rep;
  rep.n = n;

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  rep.witness = left_normed_of_indices(all);
  rep.witness_nontrivial = !is_trivial_mf(rep.witness, n);

  auto check = [&](const std::vector<int>& idx) {
    Word w = left_normed_of_indices(idx);
    ++rep.checked;
    if (is_trivial_mf(w, n)) {
      ++rep.trivial;
    } else {
      rep.failures.push_back(w);
    }
  };

  // Every (n+1)-tuple over 1..n repeats an index, so all of these must die.
  if (n <= 3) {
    rep.exhaustive = true;
    std::vector<int> idx(static_cast<std::size_t>(n) + 1, 1);
    while (true) {
      check(idx);
      int pos = n;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i <= n; ++i) idx[static_cast<std::size_t>(i)] = 1;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, n);
    for (int s = 0; s < sample_count; ++s) {
      std::vector<int> idx(static_cast<std::size_t>(n) + 1);
      for (auto& v : idx) v = pick(rng);
      check(idx);
    }
  }

  rep.passed = rep.witness_nontrivial && rep.failures.empty();
  return rep;
}

}  // namespace engelkit
