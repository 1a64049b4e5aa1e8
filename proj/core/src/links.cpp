#include "engelkit/links.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace engelkit {

const Component& LinkModel::at(int pos) const {
  if (pos < 1 || pos > size()) throw std::out_of_range("component index out of range");
  return comps_[static_cast<std::size_t>(pos - 1)];
}

LinkModel hopf() {
  LinkModel l;
  int m1 = l.meridians().declare("m1");
  int m2 = l.meridians().declare("m2");
  l.components().push_back({m1, Word::generator(m2), 0, "m1"});
  l.components().push_back({m2, Word::generator(m1), 0, "m2"});
  l.set_provenance("hopf");
  return l;
}

LinkModel unlink(int k) {
  if (k < 1) throw std::invalid_argument("unlink needs k >= 1");
  LinkModel l;
  for (int i = 1; i <= k; ++i) {
    int m = l.meridians().declare("m" + std::to_string(i));
    l.components().push_back({m, Word{}, 0, l.meridians().name(m)});
  }
  l.set_provenance("unlink(" + std::to_string(k) + ")");
  return l;
}

namespace {

void substitute_everywhere(LinkModel& l, int gen, const Word& image) {
  for (Component& c : l.components()) c.longitude = substitute(c.longitude, gen, image);
}

std::string fresh_name(const LinkModel& l, std::string base) {
  while (l.meridians().find(base)) base += "x";
  return base;
}

}  // namespace

LinkModel par(const LinkModel& l, int pos) {
  const Component& c = l.at(pos);
  LinkModel out = l;
  int copy = out.meridians().declare(fresh_name(out, c.name + "p"));
  out.components().push_back({copy, c.longitude, 0, out.meridians().name(copy)});
  substitute_everywhere(out, c.meridian,
                        Word::generator(c.meridian) * Word::generator(copy));
  out.set_provenance("par(" + l.provenance() + "," + std::to_string(pos) + ")");
  return out;
}

LinkModel delete_component(const LinkModel& l, int pos) {
  l.at(pos);
  LinkModel out = l;
  int gen = out.components()[static_cast<std::size_t>(pos - 1)].meridian;
  out.components().erase(out.components().begin() + (pos - 1));
  substitute_everywhere(out, gen, Word{});
  out.set_provenance("delete(" + l.provenance() + "," + std::to_string(pos) + ")");
  return out;
}

LinkModel bing(const LinkModel& l, int pos) {
  const Component& c = l.at(pos);
  LinkModel out = l;
  int a = out.meridians().declare(fresh_name(out, c.name + "a"));
  int b = out.meridians().declare(fresh_name(out, c.name + "b"));
  Word pair_image = commutator(Word::generator(a), Word::generator(b));
  Word pattern = substitute(c.longitude, c.meridian, pair_image);
  Component ca{a, commutator(Word::generator(b), pattern), 0, out.meridians().name(a)};
  Component cb{b, commutator(Word::generator(a), pattern), 0, out.meridians().name(b)};
  out.components().erase(out.components().begin() + (pos - 1));
  out.components().insert(out.components().begin() + (pos - 1), {ca, cb});
  substitute_everywhere(out, c.meridian, pair_image);
  out.set_provenance("bing(" + l.provenance() + "," + std::to_string(pos) + ")");
  return out;
}

LinkModel whd(const LinkModel& l, int pos, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("clasp sign must be +-1");
  const Component& c = l.at(pos);
  LinkModel out = l;
  int d = out.meridians().declare(fresh_name(out, c.name + "d"));
  Word core = substitute(c.longitude, c.meridian, Word{});
  Word md = Word::generator(d);
  Word clasp = commutator(md, md.conjugated_by(core));
  Word longitude = commutator(core, core.conjugated_by(md));
  if (sign < 0) {
    clasp = clasp.inverse();
    longitude = longitude.inverse();
  }
  out.components()[static_cast<std::size_t>(pos - 1)] =
      Component{d, longitude, 0, out.meridians().name(d)};
  substitute_everywhere(out, c.meridian, clasp);
  out.set_provenance("whd(" + l.provenance() + "," + std::to_string(pos) + "," +
                     (sign > 0 ? "+" : "-") + ")");
  return out;
}

LinkModel ram(const LinkModel& l, int pos, int r) {
  if (r < 1) throw std::invalid_argument("ramification must be >= 1");
  l.at(pos);
  LinkModel out = l;
  for (int i = 1; i < r; ++i) out = par(out, pos);
  out.set_provenance("ram(" + l.provenance() + "," + std::to_string(pos) + "," +
                     std::to_string(r) + ")");
  return out;
}

namespace {

Int mu_value(const LinkModel& l, std::span<const int> positions) {
  Monomial mono;
  for (std::size_t i = 0; i + 1 < positions.size(); ++i)
    mono.push_back(l.at(positions[i]).meridian);
  const Component& last = l.at(positions.back());
  int n = std::max(l.meridians().size(), max_generator(last.longitude));
  return reduced_expand(last.longitude, n).coefficient(mono);
}

}  // namespace

MuBar mu_bar(const LinkModel& l, std::span<const int> positions) {
  if (positions.size() < 2) throw std::invalid_argument("mu-bar needs >= 2 indices");
  std::set<int> distinct(positions.begin(), positions.end());
  if (distinct.size() != positions.size())
    throw std::invalid_argument("mu-bar indices must be distinct (link-homotopy scope)");

  MuBar out{mu_value(l, positions), true};
  // Valid iff every proper subsequence of length >= 2 vanishes.
  int r = static_cast<int>(positions.size());
  for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) sub.push_back(positions[static_cast<std::size_t>(i)]);
    if (sub.size() < 2) continue;
    if (mu_value(l, sub) != 0) {
      out.valid = false;
      break;
    }
  }
  return out;
}

bool h_trivial(const LinkModel& l) {
  int n = l.meridians().size();
  for (const Component& c : l.components()) {
    ReducedSeries red = reduced_expand(c.longitude, std::max(n, 1));
    for (const auto& [m, coef] : red.terms()) {
      if (m.empty()) continue;
      if (std::find(m.begin(), m.end(), c.meridian) == m.end()) return false;
    }
  }
  return true;
}

std::string to_string(LinkClass c) {
  switch (c) {
    case LinkClass::HEssential: return "h-essential";
    case LinkClass::HTrivialNotPlus: return "h-trivial-not-plus";
    case LinkClass::HTrivialPlus: return "h-trivial-plus";
  }
  return "?";
}

LinkClass classify(const LinkModel& l) {
  if (!h_trivial(l)) return LinkClass::HEssential;
  for (int pos = 1; pos <= l.size(); ++pos)
    if (!h_trivial(par(l, pos))) return LinkClass::HTrivialNotPlus;
  return LinkClass::HTrivialPlus;
}

// ---------------------------------------------------------------------------
// DSL

namespace {

struct DslParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos), pos);
  }

  void ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  int sign() {
    ws();
    if (eat('+')) return +1;
    if (eat('-')) return -1;
    fail("expected '+' or '-'");
  }

  std::string word() {
    ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected constructor name");
    return std::string(text.substr(start, pos - start));
  }

  LinkExpr expr() {
    std::string name = word();
    LinkExpr e;
    if (name == "hopf") {
      e.kind = LinkExpr::Kind::Hopf;
      return e;
    }
    if (name == "unlink") {
      e.kind = LinkExpr::Kind::Unlink;
      expect('(');
      e.arg = integer();
      expect(')');
      return e;
    }
    if (name == "wh") {
      e.kind = LinkExpr::Kind::Wh;
      expect('(');
      e.sign = sign();
      expect(')');
      return e;
    }
    if (name == "bing" || name == "par") {
      e.kind = name == "bing" ? LinkExpr::Kind::Bing : LinkExpr::Kind::Par;
      expect('(');
      e.child.push_back(expr());
      expect(',');
      e.arg = integer();
      expect(')');
      return e;
    }
    if (name == "whd") {
      e.kind = LinkExpr::Kind::Whd;
      expect('(');
      e.child.push_back(expr());
      expect(',');
      e.arg = integer();
      expect(',');
      e.sign = sign();
      expect(')');
      return e;
    }
    if (name == "ram") {
      e.kind = LinkExpr::Kind::Ram;
      expect('(');
      e.child.push_back(expr());
      expect(',');
      e.arg = integer();
      expect(',');
      e.arg2 = integer();
      expect(')');
      return e;
    }
    fail("unknown constructor: " + name);
  }
};

}  // namespace

LinkExpr parse_link_expr(std::string_view text) {
  DslParser p{text};
  LinkExpr e = p.expr();
  p.ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return e;
}

std::string to_string(const LinkExpr& e) {
  switch (e.kind) {
    case LinkExpr::Kind::Hopf: return "hopf";
    case LinkExpr::Kind::Unlink: return "unlink(" + std::to_string(e.arg) + ")";
    case LinkExpr::Kind::Wh: return std::string("wh(") + (e.sign > 0 ? "+" : "-") + ")";
    case LinkExpr::Kind::Bing:
      return "bing(" + to_string(e.child[0]) + "," + std::to_string(e.arg) + ")";
    case LinkExpr::Kind::Par:
      return "par(" + to_string(e.child[0]) + "," + std::to_string(e.arg) + ")";
    case LinkExpr::Kind::Whd:
      return "whd(" + to_string(e.child[0]) + "," + std::to_string(e.arg) + "," +
             (e.sign > 0 ? "+" : "-") + ")";
    case LinkExpr::Kind::Ram:
      return "ram(" + to_string(e.child[0]) + "," + std::to_string(e.arg) + "," +
             std::to_string(e.arg2) + ")";
  }
  return "?";
}

LinkModel build(const LinkExpr& e) {
  switch (e.kind) {
    case LinkExpr::Kind::Hopf: return hopf();
    case LinkExpr::Kind::Unlink: return unlink(e.arg);
    case LinkExpr::Kind::Wh: return whd(hopf(), 2, e.sign);
    case LinkExpr::Kind::Bing: return bing(build(e.child[0]), e.arg);
    case LinkExpr::Kind::Par: return par(build(e.child[0]), e.arg);
    case LinkExpr::Kind::Whd: return whd(build(e.child[0]), e.arg, e.sign);
    case LinkExpr::Kind::Ram: return ram(build(e.child[0]), e.arg, e.arg2);
  }
  throw std::logic_error("unreachable");
}

LinkModel build(std::string_view dsl) { return build(parse_link_expr(dsl)); }

// ---------------------------------------------------------------------------
// Families

LinkModel family_underlying(const FamilySpec& spec) {
  LinkModel link = spec.seed == FamilySpec::Seed::Hopf ? hopf() : whd(hopf(), 2, spec.seed_sign);
  if (spec.seed == FamilySpec::Seed::Hopf && spec.bing_ops.empty())
    throw std::invalid_argument("a Hopf seed needs a nontrivial doubling tree");

  for (const FamilySpec::BingOp& op : spec.bing_ops) {
    if (op.component < 1 || op.component > link.size())
      throw std::invalid_argument("doubling tree touches an undefined component");
    if (op.ramification < 1) throw std::invalid_argument("ramification must be >= 1");
    int before = link.size();
    link = ram(link, op.component, op.ramification);
    // Copies sit at the original position and at the appended tail; double
    // tail-first so earlier positions stay put.
    std::vector<int> slots;
    for (int extra = 0; extra < op.ramification - 1; ++extra)
      slots.push_back(before + 1 + extra);
    slots.push_back(op.component);
    std::sort(slots.rbegin(), slots.rend());
    for (int s : slots) link = bing(link, s);
  }
  return link;
}

FamilyMember family(const FamilySpec& spec) {
  FamilyMember out;
  out.underlying = family_underlying(spec);
  LinkModel link = out.underlying;

  int base = link.size();
  auto ram_of = [&](int i) {
    if (spec.wh_ram.empty()) return 1;
    if (static_cast<int>(spec.wh_ram.size()) != base)
      throw std::invalid_argument("wh_ram must list one multiplicity per component");
    return spec.wh_ram[static_cast<std::size_t>(i - 1)];
  };
  auto sign_of = [&](int i) {
    if (spec.wh_signs.empty()) return +1;
    if (static_cast<int>(spec.wh_signs.size()) != base)
      throw std::invalid_argument("wh_signs must list one sign per component");
    return spec.wh_signs[static_cast<std::size_t>(i - 1)];
  };

  // One ramified Whitehead doubling per component of the underlying link.
  std::vector<std::vector<int>> slots(static_cast<std::size_t>(base) + 1);
  for (int i = 1; i <= base; ++i) {
    int before = link.size();
    int r = ram_of(i);
    if (r < 1) throw std::invalid_argument("ramification must be >= 1");
    link = ram(link, i, r);
    slots[static_cast<std::size_t>(i)].push_back(i);
    for (int extra = 0; extra < r - 1; ++extra)
      slots[static_cast<std::size_t>(i)].push_back(before + 1 + extra);
  }
  for (int i = 1; i <= base; ++i)
    for (int s : slots[static_cast<std::size_t>(i)]) link = whd(link, s, sign_of(i));

  out.link = link;
  return out;
}

}  // namespace engelkit
