#include <doctest.h>

#include <random>

#include "engelkit/words.hpp"

using namespace engelkit;

namespace {

GeneratorContext xy_ctx() {
  GeneratorContext ctx;
  for (const char* n : {"x", "y", "z", "w"}) ctx.declare(n);
  return ctx;
}

Word random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n);
  std::vector<Letter> letters;
  int l = len(rng);
  for (int i = 0; i < l; ++i) letters.push_back({gen(rng), rng() % 2 ? 1 : -1});
  return Word::from_letters(letters);
}

// Reduces at arbitrary positions instead of left-to-right; used to check
// confluence of free reduction.
Word scrambled_reduce(std::vector<Letter> letters, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::size_t> cancelable;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i].gen == letters[i + 1].gen && letters[i].sign == -letters[i + 1].sign)
        cancelable.push_back(i);
    if (cancelable.empty()) break;
    std::size_t pick = cancelable[rng() % cancelable.size()];
    letters.erase(letters.begin() + static_cast<long>(pick),
                  letters.begin() + static_cast<long>(pick) + 2);
  }
  return Word::from_letters(letters);
}

}  // namespace

TEST_CASE("commutator convention") {
  GeneratorContext ctx = GeneratorContext::numbered("x", 2);
  Word w = parse_word("[x1,x2]", ctx);
  CHECK(to_string(w, ctx) == "x1*x2*x1^-1*x2^-1");
}

TEST_CASE("free reduction through the parser") {
  GeneratorContext ctx = GeneratorContext::numbered("x", 1);
  CHECK(parse_word("x1*x1^-1", ctx).empty());
  CHECK(parse_word("1", ctx).empty());
}

TEST_CASE("left-normed bracket with product entries") {
  GeneratorContext ctx = xy_ctx();
  Word parsed = parse_word("[x,y*z,y*z,w]", ctx);
  Word p = Word::generator(2) * Word::generator(3);
  std::vector<Word> parts = {Word::generator(1), p, p, Word::generator(4)};
  Word constructed = left_normed_commutator(parts);
  CHECK(parsed == constructed);
  CHECK(parsed.length() == 26);
}

TEST_CASE("conjugation convention") {
  GeneratorContext ctx = GeneratorContext::numbered("x", 2);
  Word w = parse_word("x2^x1", ctx);
  CHECK(to_string(w, ctx) == "x1^-1*x2*x1");
}

TEST_CASE("left-normed triple has length ten") {
  std::vector<Word> ms = {Word::generator(1), Word::generator(2), Word::generator(3)};
  Word w = left_normed_commutator(ms);
  CHECK(w.length() == 10);
  CHECK(w == commutator(commutator(ms[0], ms[1]), ms[2]));
}

TEST_CASE("precedence: caret binds tighter than star") {
  GeneratorContext ctx = GeneratorContext::numbered("x", 3);
  CHECK(parse_word("x1^x2*x3", ctx) ==
        parse_word("(x1^x2)*x3", ctx));
  CHECK(parse_word("x1*x2^x3", ctx) == parse_word("x1*(x2^x3)", ctx));
}

TEST_CASE("integer exponents") {
  GeneratorContext ctx = GeneratorContext::numbered("x", 1);
  CHECK(parse_word("x1^-1", ctx) == Word::generator(1, -1));
  CHECK(parse_word("x1^3", ctx).length() == 3);
  CHECK(parse_word("x1^0", ctx).empty());
  CHECK(parse_word("(x1^2)^-1", ctx) == parse_word("x1^-2", ctx));
}

TEST_CASE("parse errors carry positions") {
  GeneratorContext ctx = GeneratorContext::numbered("x", 2);
  CHECK_THROWS_AS(parse_word("x1*", ctx), ParseError);
  CHECK_THROWS_AS(parse_word("[x1]", ctx), ParseError);
  CHECK_THROWS_AS(parse_word("q7", ctx), ParseError);
  CHECK_THROWS_AS(parse_word("x1*)x2", ctx), ParseError);
}

TEST_CASE("group laws on random words") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, 3, 10);
    Word v = random_word(rng, 3, 10);
    Word w = random_word(rng, 3, 10);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * u.inverse()).empty());
    CHECK(u.conjugated_by(v) == v.inverse() * u * v);
  }
}

TEST_CASE("print / parse round trip") {
  std::mt19937_64 rng(102);
  GeneratorContext ctx = GeneratorContext::numbered("m", 4);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 4, 12);
    CHECK(parse_word(to_string(u, ctx), ctx) == u);
  }
}

TEST_CASE("left-normed recursion") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> parts;
    int k = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j < k; ++j) parts.push_back(random_word(rng, 3, 4));
    std::vector<Word> head(parts.begin(), parts.end() - 1);
    CHECK(left_normed_commutator(parts) ==
          commutator(left_normed_commutator(head), parts.back()));
  }
}

TEST_CASE("free reduction is confluent") {
  std::mt19937_64 rng(104);
  std::uniform_int_distribution<int> gen(1, 3);
  for (int i = 0; i < 200; ++i) {
    std::vector<Letter> letters;
    int l = static_cast<int>(rng() % 20);
    for (int j = 0; j < l; ++j) letters.push_back({gen(rng), rng() % 2 ? 1 : -1});
    Word canonical = Word::from_letters(letters);
    CHECK(scrambled_reduce(letters, rng) == canonical);
  }
}

TEST_CASE("substitution") {
  GeneratorContext ctx = GeneratorContext::numbered("x", 3);
  Word w = parse_word("[x1,x2]", ctx);
  Word image = parse_word("x3*x2", ctx);
  Word sub = substitute(w, 1, image);
  CHECK(sub == parse_word("[x3*x2,x2]", ctx));
  CHECK(substitute(w, 1, Word{}) == parse_word("x2*x2^-1", ctx));
  CHECK(substitute(w, 1, Word{}).empty());
}

TEST_CASE("exponent sums") {
  GeneratorContext ctx = GeneratorContext::numbered("x", 2);
  Word w = parse_word("[x1,x2]", ctx);
  CHECK(exponent_sum(w, 1) == 0);
  CHECK(exponent_sum(parse_word("x1*x1*x2^-1", ctx), 1) == 2);
}
