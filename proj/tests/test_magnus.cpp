#include <doctest.h>

#include <random>

#include "engelkit/magnus.hpp"
#include "engelkit/words.hpp"

using namespace engelkit;

namespace {

Word random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n);
  std::vector<Letter> letters;
  int l = len(rng);
  for (int i = 0; i < l; ++i) letters.push_back({gen(rng), rng() % 2 ? 1 : -1});
  return Word::from_letters(letters);
}

Word gen(int i) { return Word::generator(i); }

}  // namespace

TEST_CASE("generator image") {
  TruncSeries s = expand(gen(1), 3);
  CHECK(s.coefficient({}) == 1);
  CHECK(s.coefficient({1}) == 1);
  CHECK(s.terms().size() == 2);
}

TEST_CASE("commutator image at degree two") {
  TruncSeries s = expand(commutator(gen(1), gen(2)), 2);
  CHECK(s.coefficient({}) == 1);
  CHECK(s.coefficient({1, 2}) == 1);
  CHECK(s.coefficient({2, 1}) == -1);
  CHECK(s.coefficient({1}) == 0);
  CHECK(s.terms().size() == 3);
}

TEST_CASE("empty word expands to one") {
  CHECK(expand(Word{}, 5).is_one());
}

TEST_CASE("inverse letter is exact in the truncated ring") {
  // (1+X)(1-X+X^2) = 1 + X^3-tail, exact at cap 2
  TruncSeries prod = expand(gen(1), 2) * expand(gen(1).inverse(), 2);
  CHECK(prod.is_one());
}

TEST_CASE("series product example") {
  TruncSeries a(2), b(2);
  a.add_term({}, 1);
  a.add_term({1}, 1);
  b.add_term({}, 1);
  b.add_term({1}, -1);
  TruncSeries p = a * b;
  CHECK(p.coefficient({}) == 1);
  CHECK(p.coefficient({1}) == 0);
  CHECK(p.coefficient({1, 1}) == -1);
}

TEST_CASE("series inverse is the geometric series") {
  TruncSeries a(2);
  a.add_term({}, 1);
  a.add_term({1}, 1);
  TruncSeries inv = series_inverse(a);
  CHECK(inv.coefficient({}) == 1);
  CHECK(inv.coefficient({1}) == -1);
  CHECK(inv.coefficient({1, 1}) == 1);
  CHECK((a * inv).is_one());
  CHECK_THROWS(series_inverse(TruncSeries(3)));
}

TEST_CASE("reduced expansion kills the defining relators") {
  Word rel = commutator(gen(1), gen(1).conjugated_by(gen(2)));
  CHECK(reduced_expand(rel, 2).is_one());
}

TEST_CASE("reduced expansion of a product of generators") {
  ReducedSeries s = reduced_expand(gen(1) * gen(2), 2);
  CHECK(s.coefficient({}) == 1);
  CHECK(s.coefficient({1}) == 1);
  CHECK(s.coefficient({2}) == 1);
  CHECK(s.coefficient({1, 2}) == 1);
  CHECK(s.terms().size() == 4);
}

TEST_CASE("reduced expansion of the double commutator") {
  Word gamma = commutator(commutator(gen(1), gen(2)), commutator(gen(3), gen(4)));
  ReducedSeries s = reduced_expand(gamma, 4);
  // 1 + ab - ba with a = X1X2 - X2X1, b = X3X4 - X4X3.
  CHECK(s.terms().size() == 9);
  CHECK(s.coefficient({1, 2, 3, 4}) == 1);
  CHECK(s.coefficient({1, 2, 4, 3}) == -1);
  CHECK(s.coefficient({2, 1, 3, 4}) == -1);
  CHECK(s.coefficient({2, 1, 4, 3}) == 1);
  CHECK(s.coefficient({3, 4, 1, 2}) == -1);
  CHECK(s.coefficient({3, 4, 2, 1}) == 1);
  CHECK(s.coefficient({4, 3, 1, 2}) == 1);
  CHECK(s.coefficient({4, 3, 2, 1}) == -1);
}

TEST_CASE("lowest degree and lcs placement") {
  Word gamma = commutator(commutator(gen(1), gen(2)), commutator(gen(3), gen(4)));
  CHECK(lcs_degree(gamma, 5) == 4);
  CHECK(lcs_degree(gen(1), 5) == 1);
  CHECK(!lcs_degree(Word{}, 4).has_value());

  Word p = gen(2) * gen(3);
  std::vector<Word> parts = {gen(1), p, p, gen(4)};
  CHECK(lcs_degree(left_normed_commutator(parts), 5) == 4);
}

TEST_CASE("homomorphism and inverse laws") {
  std::mt19937_64 rng(201);
  std::uniform_int_distribution<int> npick(1, 4), dpick(1, 5);
  for (int i = 0; i < 300; ++i) {
    int n = npick(rng), d = dpick(rng);
    Word u = random_word(rng, n, 12), v = random_word(rng, n, 12);
    CHECK(expand(u * v, d) == expand(u, d) * expand(v, d));
    CHECK((expand(u, d) * expand(u.inverse(), d)).is_one());
  }
}

TEST_CASE("expansion is constant on free-equivalence classes") {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<int> gpick(1, 3);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 3, 10);
    // Insert canceling pairs at random spots; the stored reduction must not care.
    std::vector<Letter> padded = u.letters();
    for (int k = 0; k < 3; ++k) {
      int g = gpick(rng);
      std::size_t at = padded.empty() ? 0 : rng() % (padded.size() + 1);
      padded.insert(padded.begin() + static_cast<long>(at), {g, -1});
      padded.insert(padded.begin() + static_cast<long>(at), {g, 1});
    }
    CHECK(expand(Word::from_letters(padded), 4) == expand(u, 4));
  }
}

TEST_CASE("reduced expansion equals reduction of the full expansion") {
  std::mt19937_64 rng(203);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 4, 10);
    CHECK(reduced_expand(u, 4) == reduce(expand(u, 4), 4));
  }
}

TEST_CASE("relators die for random conjugators") {
  std::mt19937_64 rng(204);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rng() % 3);
    int g = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(n));
    Word y = random_word(rng, n, 8);
    Word rel = commutator(gen(g), gen(g).conjugated_by(y));
    CHECK(reduced_expand(rel, n).is_one());
  }
}
