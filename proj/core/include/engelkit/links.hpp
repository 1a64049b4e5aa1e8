#pragma once

#include <span>
#include <string>
#include <vector>

#include "engelkit/bigint.hpp"
#include "engelkit/magnus.hpp"
#include "engelkit/words.hpp"

namespace engelkit {

// One link component: a meridian symbol, the longitude read as a word over
// all meridians, and a framing (0 throughout the constructions in scope).
struct Component {
  int meridian = 0;
  Word longitude;
  int framing = 0;
  std::string name;
};

// Ordered word-level link model. Meridian ids live in the model's own
// generator context; components are addressed by 1-based position.
class LinkModel {
 public:
  const GeneratorContext& meridians() const { return ctx_; }
  GeneratorContext& meridians() { return ctx_; }
  const std::vector<Component>& components() const { return comps_; }
  std::vector<Component>& components() { return comps_; }
  int size() const { return static_cast<int>(comps_.size()); }

  const Component& at(int pos) const;  // 1-based
  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

 private:
  GeneratorContext ctx_;
  std::vector<Component> comps_;
  std::string provenance_;
};

LinkModel hopf();
LinkModel unlink(int k);

// Appends a 0-framed parallel copy of component pos and substitutes
// m -> m * m_copy in every longitude.
LinkModel par(const LinkModel& l, int pos);

// Sets the meridian to the identity in all longitudes and removes the
// component.
LinkModel delete_component(const LinkModel& l, int pos);

// Replaces component pos by a clasped pair a, b: other longitudes read
// [m_a, m_b] where they read the old meridian; the new longitudes are
// commutators of the opposite new meridian with the substituted old
// longitude. Signs are pinned by the Borromean validation oracle.
LinkModel bing(const LinkModel& l, int pos);

// Replaces component pos by a single winding-zero clasped curve d: other
// longitudes read [m_d, m_d^L] (inverted for sign -1) where L is the old
// longitude with self-passages dropped; the new longitude is the mirror
// clasp [L, L^{m_d}]. Pinned by the Whitehead-link validation oracle.
LinkModel whd(const LinkModel& l, int pos, int sign);

// r parallel copies of component pos (r-1 applications of par); r >= 1.
LinkModel ram(const LinkModel& l, int pos, int r);

// mu-bar over distinct component positions: the coefficient of the
// monomial of the leading positions' meridians in the reduced expansion of
// the last position's longitude. Valid iff every proper subsequence of
// length >= 2 has value zero.
struct MuBar {
  Int value;
  bool valid = false;
};
MuBar mu_bar(const LinkModel& l, std::span<const int> positions);

// All distinct-index mu-bar values vanish. Checked per component on the
// reduced longitude expansion, which covers every tuple at once.
bool h_trivial(const LinkModel& l);

enum class LinkClass { HEssential, HTrivialNotPlus, HTrivialPlus };
std::string to_string(LinkClass c);

// h-trivial plus: still h-trivial after adding a parallel copy of any
// single component.
LinkClass classify(const LinkModel& l);

// Construction DSL:
//   hopf | unlink(k) | wh(+)|wh(-) | bing(E,i) | whd(E,i,+|-)
//   | ram(E,i,r) | par(E,i)
struct LinkExpr {
  enum class Kind { Hopf, Unlink, Wh, Bing, Whd, Ram, Par };
  Kind kind = Kind::Hopf;
  int arg = 0;   // k, component index, or ramification (Ram uses arg2 too)
  int arg2 = 0;
  int sign = +1;
  std::vector<LinkExpr> child;
};

LinkExpr parse_link_expr(std::string_view text);
std::string to_string(const LinkExpr& e);
LinkModel build(const LinkExpr& e);
LinkModel build(std::string_view dsl);

// Parametrized families: a seed, iterated ramified Bing doubling, then one
// ramified +- Whitehead doubling applied to every component.
struct FamilySpec {
  enum class Seed { Hopf, Wh };
  Seed seed = Seed::Hopf;
  int seed_sign = +1;  // clasp sign of a Wh seed
  struct BingOp {
    int component = 1;    // position at the time the op applies
    int ramification = 1; // copies doubled, >= 1
  };
  std::vector<BingOp> bing_ops;
  std::vector<int> wh_ram;    // per component of the underlying link; default 1
  std::vector<int> wh_signs;  // per component; default +1
};

struct FamilyMember {
  LinkModel link;        // the fully doubled link
  LinkModel underlying;  // the pre-Whitehead link the family classifies
};

FamilyMember family(const FamilySpec& spec);

// The pre-Whitehead link alone. Iterated doubling multiplies longitude
// lengths, so large members are classified through this without building
// the fully doubled word model.
LinkModel family_underlying(const FamilySpec& spec);

}  // namespace engelkit
