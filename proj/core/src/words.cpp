#include "engelkit/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace engelkit {

int GeneratorContext::declare(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("generator name must be nonempty");
  if (ids_.contains(name))
    throw std::invalid_argument("duplicate generator name: " + name);
  names_.push_back(name);
  int id = static_cast<int>(names_.size());
  ids_.emplace(name, id);
  return id;
}

std::optional<int> GeneratorContext::find(std::string_view name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& GeneratorContext::name(int id) const {
  if (id < 1 || id > size()) throw std::out_of_range("generator id out of range");
  return names_[static_cast<std::size_t>(id - 1)];
}

GeneratorContext GeneratorContext::numbered(const std::string& prefix, int n) {
  GeneratorContext ctx;
  for (int i = 1; i <= n; ++i) ctx.declare(prefix + std::to_string(i));
  return ctx;
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word Word::generator(int id, int sign) {
  if (id < 1) throw std::invalid_argument("generator id must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  Word w;
  w.letters_.push_back({id, sign});
  return w;
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  for (const Letter& l : letters) push_reduced(w.letters_, l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->sign});
  return w;
}

Word Word::conjugated_by(const Word& b) const {
  return b.inverse() * (*this) * b;
}

Word Word::pow(long long e) const {
  Word base = e < 0 ? inverse() : *this;
  long long k = e < 0 ? -e : e;
  Word acc;
  while (k-- > 0) acc = acc * base;
  return acc;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (const Letter& l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters_.size() != b.letters_.size())
    return a.letters_.size() < b.letters_.size();
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    const Letter &x = a.letters_[i], &y = b.letters_[i];
    if (x.gen != y.gen) return x.gen < y.gen;
    if (x.sign != y.sign) return x.sign > y.sign;  // positive first
  }
  return false;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

Word left_normed_commutator(std::span<const Word> parts) {
  if (parts.empty()) return {};
  Word acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = commutator(acc, parts[i]);
  return acc;
}

Word substitute(const Word& w, int gen, const Word& replacement) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      out = out * (l.sign > 0 ? replacement : replacement.inverse());
    } else {
      Letter single[1] = {l};
      out = out * Word::from_letters(single);
    }
  }
  return out;
}

int max_generator(const Word& w) {
  int m = 0;
  for (const Letter& l : w.letters()) m = std::max(m, l.gen);
  return m;
}

long long exponent_sum(const Word& w, int gen) {
  long long s = 0;
  for (const Letter& l : w.letters())
    if (l.gen == gen) s += l.sign;
  return s;
}

std::string to_string(const Word& w, const GeneratorContext& ctx) {
  if (w.empty()) return "1";
  std::string out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out += '*';
    first = false;
    out += ctx.name(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar in the header.

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  WordExpr parse() {
    WordExpr e = product();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  WordExpr product() {
    WordExpr e = power();
    while (true) {
      skip_ws();
      if (!eat('*')) break;
      WordExpr rhs = power();
      WordExpr prod;
      prod.kind = WordExpr::Kind::Product;
      prod.children = {std::move(e), std::move(rhs)};
      e = std::move(prod);
    }
    return e;
  }

  WordExpr power() {
    WordExpr e = atom();
    while (true) {
      skip_ws();
      if (!eat('^')) break;
      skip_ws();
      if (pos_ < text_.size() &&
          (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        std::size_t start = pos_;
        if (text_[pos_] == '-') ++pos_;
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected integer exponent");
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        WordExpr pw;
        pw.kind = WordExpr::Kind::Power;
        pw.exponent = std::atoll(std::string(text_.substr(start, pos_ - start)).c_str());
        pw.children = {std::move(e)};
        e = std::move(pw);
      } else {
        WordExpr by = atom();
        WordExpr cj;
        cj.kind = WordExpr::Kind::Conjugate;
        cj.children = {std::move(e), std::move(by)};
        e = std::move(cj);
      }
    }
    return e;
  }

  WordExpr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WordExpr e = product();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '[') {
      ++pos_;
      WordExpr e;
      e.kind = WordExpr::Kind::Commutator;
      e.children.push_back(product());
      if (!eat(',')) fail("commutator needs at least two arguments");
      e.children.push_back(product());
      while (eat(',')) e.children.push_back(product());
      if (!eat(']')) fail("expected ']'");
      return e;
    }
    if (c == '1') {
      ++pos_;
      WordExpr e;
      e.kind = WordExpr::Kind::Identity;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
      WordExpr e;
      e.kind = WordExpr::Kind::Atom;
      e.atom = std::string(text_.substr(start, pos_ - start));
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

Word evaluate_impl(const WordExpr& expr, const GeneratorContext& ctx,
                   GeneratorContext* mutable_ctx) {
  switch (expr.kind) {
    case WordExpr::Kind::Identity:
      return {};
    case WordExpr::Kind::Atom: {
      const GeneratorContext& c = mutable_ctx ? *mutable_ctx : ctx;
      if (auto id = c.find(expr.atom)) return Word::generator(*id);
      if (mutable_ctx) return Word::generator(mutable_ctx->declare(expr.atom));
      throw ParseError("unknown generator name: " + expr.atom, 0);
    }
    case WordExpr::Kind::Product: {
      Word a = evaluate_impl(expr.children[0], ctx, mutable_ctx);
      Word b = evaluate_impl(expr.children[1], ctx, mutable_ctx);
      return a * b;
    }
    case WordExpr::Kind::Power: {
      Word a = evaluate_impl(expr.children[0], ctx, mutable_ctx);
      return a.pow(expr.exponent);
    }
    case WordExpr::Kind::Conjugate: {
      Word a = evaluate_impl(expr.children[0], ctx, mutable_ctx);
      Word b = evaluate_impl(expr.children[1], ctx, mutable_ctx);
      return a.conjugated_by(b);
    }
    case WordExpr::Kind::Commutator: {
      std::vector<Word> parts;
      parts.reserve(expr.children.size());
      for (const WordExpr& ch : expr.children)
        parts.push_back(evaluate_impl(ch, ctx, mutable_ctx));
      return left_normed_commutator(parts);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

WordExpr parse_word_expr(std::string_view text) { return Parser(text).parse(); }

Word evaluate(const WordExpr& expr, const GeneratorContext& ctx) {
  return evaluate_impl(expr, ctx, nullptr);
}

Word parse_word(std::string_view text, const GeneratorContext& ctx) {
  return evaluate(parse_word_expr(text), ctx);
}

Word parse_word(std::string_view text, GeneratorContext& ctx, bool auto_declare) {
  WordExpr e = parse_word_expr(text);
  if (!auto_declare) return evaluate(e, ctx);
  return evaluate_impl(e, ctx, &ctx);
}

}  // namespace engelkit
