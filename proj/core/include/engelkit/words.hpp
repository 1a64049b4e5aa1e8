#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace engelkit {

// A signed generator occurrence. `gen` is a 1-based id in some
// GeneratorContext, `sign` is +1 or -1.
struct Letter {
  int gen = 0;
  int sign = +1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Maps generator display names to 1-based ids and back. Contexts are
// value types; a link's meridians and a free group's generators live in
// separate contexts and never collide.
class GeneratorContext {
 public:
  GeneratorContext() = default;

  // Declares a new generator; throws on duplicate names.
  int declare(const std::string& name);

  std::optional<int> find(std::string_view name) const;
  const std::string& name(int id) const;
  int size() const { return static_cast<int>(names_.size()); }

  // Context with generators prefix1..prefixN (e.g. m1..m4).
  static GeneratorContext numbered(const std::string& prefix, int n);

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> ids_;
};

// A freely reduced word in a free group. The empty word is the identity.
// All operations keep the reduced invariant.
class Word {
 public:
  Word() = default;

  static Word generator(int id, int sign = +1);
  static Word from_letters(std::span<const Letter> letters);

  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const;
  // b^-1 * this * b
  Word conjugated_by(const Word& b) const;
  Word pow(long long e) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

// [a,b] = a b a^-1 b^-1. This convention (with a^b = b^-1 a b) is the
// single source of truth for every module in the library.
Word commutator(const Word& a, const Word& b);

// [a1,...,an] = [[...[a1,a2],...],an]; identity for n = 1, empty for n = 0.
Word left_normed_commutator(std::span<const Word> parts);

// Replaces every occurrence of generator `gen` by `replacement` (inverted
// for negative letters) and freely reduces.
Word substitute(const Word& w, int gen, const Word& replacement);

// Largest generator id occurring in w (0 for the empty word).
int max_generator(const Word& w);

// Sum of signs of the letters with the given generator id.
long long exponent_sum(const Word& w, int gen);

// Prints letters joined by '*' with '^-1' for inverses; the empty word
// prints as "1" (which parse_word accepts back).
std::string to_string(const Word& w, const GeneratorContext& ctx);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
  std::size_t position;
};

// Expression AST for the word grammar:
//   expr := atom | expr "*" expr | expr "^" expr | expr "^" int
//         | "[" expr ("," expr)+ "]"
//   atom := name | "(" expr ")" | "1"
// "^" binds tighter than "*"; brackets with >= 3 arguments are left-normed.
struct WordExpr {
  enum class Kind { Atom, Identity, Product, Power, Conjugate, Commutator };
  Kind kind = Kind::Identity;
  std::string atom;                                // Kind::Atom
  long long exponent = 0;                          // Kind::Power
  std::vector<WordExpr> children;                  // others
};

WordExpr parse_word_expr(std::string_view text);

// Evaluates against a fixed context; unknown names throw ParseError.
Word evaluate(const WordExpr& expr, const GeneratorContext& ctx);

// Parse + evaluate. The auto_declare overload declares unseen names in
// order of first appearance (CLI convenience).
Word parse_word(std::string_view text, const GeneratorContext& ctx);
Word parse_word(std::string_view text, GeneratorContext& ctx, bool auto_declare);

}  // namespace engelkit
