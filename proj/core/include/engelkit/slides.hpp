#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "engelkit/decomp.hpp"
#include "engelkit/links.hpp"
#include "engelkit/words.hpp"

namespace engelkit {

enum class CurveRole { Gamma, EngelComponent, Dual, Correction };
std::string to_string(CurveRole r);

struct Curve {
  std::string name;
  Word word;  // over the state's generator context
  int framing = 0;
  CurveRole role = CurveRole::Correction;
  int meridian = 0;  // generator id for component curves, 0 otherwise
};

// Word-level Kirby-diagram state: dotted generators (1-handles) plus framed
// curves, with a registry of parallel curve pairs. Immutable-value usage:
// moves return new states.
class DiagramState {
 public:
  GeneratorContext& context() { return ctx_; }
  const GeneratorContext& context() const { return ctx_; }

  std::set<int>& dotted() { return dotted_; }
  const std::set<int>& dotted() const { return dotted_; }

  std::vector<Curve>& curves() { return curves_; }
  const std::vector<Curve>& curves() const { return curves_; }

  const Curve* find_curve(std::string_view name) const;
  Curve* find_curve(std::string_view name);

  // Both curves must exist and carry identical words.
  void register_parallel(const std::string& a, const std::string& b);
  const std::vector<std::pair<std::string, std::string>>& parallel_pairs() const {
    return pairs_;
  }

 private:
  GeneratorContext ctx_;
  std::set<int> dotted_;
  std::vector<Curve> curves_;
  std::vector<std::pair<std::string, std::string>> pairs_;
};

struct SlideMove {
  std::string slid;
  std::string over;
  Word band;  // conjugator
  int sign = +1;
};

// w_slid <- w_slid * (w_over^sign)^band; everything else unchanged. The
// over-curve must be 0-framed.
DiagramState slide(const DiagramState& state, const SlideMove& move);

// Sets a dotted generator to the identity in every curve word and removes it.
DiagramState delete_dotted(const DiagramState& state, const std::string& name);

struct WndlCheck {
  bool free_trivial = false;
  bool milnor_trivial = false;
  bool instance() const { return !free_trivial && milnor_trivial; }
};

// A usable hypothesis instance has a freely nontrivial word that dies in the
// reduced-Magnus model.
WndlCheck wndl_check(const Word& gamma, int n);

// Pre-stabilization state of an elementary Engel link: the four slot
// generators dotted, the distinguished curve reading the commutator, and
// inert dual labels. Requires a link-realizable commutator.
DiagramState engel_diagram_state(const ElementaryCommutator& c);

// Stabilized form: the four circles as 0-framed component curves (an unlink,
// so their longitudes are empty) with the product pair registered parallel.
DiagramState engel_link_state(const ElementaryCommutator& c);

struct SlidePropertyReport {
  bool shape_ok = false;
  std::string split_component;    // ends with an empty word
  bool split_word_empty = false;
  bool meridian_vanished = false; // no remaining word mentions it
  LinkClass remainder_class = LinkClass::HEssential;
  bool remainder_h_trivial = false;
  bool holds = false;
  Word gamma_after;  // the curve word after the slide rewrite
  // The model stops before any dotted/2-handle trade; the report says so.
  std::string scope_note;
};

// Slides one member of the registered parallel pair along the other and
// rewrites the handle basis accordingly; verifies that the slid component
// splits off as an unknot and the remainder classifies h-trivial. The state
// models the diagram before any dotted/2-handle trade, as the remainder
// conversion notes in its report.
SlidePropertyReport engel_slide_property(const DiagramState& state);

// Line-oriented scripts:
//   dotted <name>...
//   curve <name> <word> [framing] [gamma|component|dual|correction]
//   parallel <a> <b>
//   slide <curve> over <curve> band <word> sign <+|->
//   delete <name>
//   report
struct ScriptResult {
  DiagramState state;
  std::string transcript;
};

ScriptResult run_script(std::istream& in);

}  // namespace engelkit
