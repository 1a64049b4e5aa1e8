#include "engelkit/slides.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "engelkit/milnor.hpp"

namespace engelkit {

std::string to_string(CurveRole r) {
  switch (r) {
    case CurveRole::Gamma: return "gamma";
    case CurveRole::EngelComponent: return "component";
    case CurveRole::Dual: return "dual";
    case CurveRole::Correction: return "correction";
  }
  return "?";
}

const Curve* DiagramState::find_curve(std::string_view name) const {
  for (const Curve& c : curves_)
    if (c.name == name) return &c;
  return nullptr;
}

Curve* DiagramState::find_curve(std::string_view name) {
  for (Curve& c : curves_)
    if (c.name == name) return &c;
  return nullptr;
}

void DiagramState::register_parallel(const std::string& a, const std::string& b) {
  const Curve* ca = find_curve(a);
  const Curve* cb = find_curve(b);
  if (!ca || !cb) throw std::invalid_argument("parallel pair names an unknown curve");
  if (!(ca->word == cb->word))
    throw std::invalid_argument("parallel pair must have identical words");
  pairs_.emplace_back(a, b);
}

DiagramState slide(const DiagramState& state, const SlideMove& move) {
  const Curve* over = state.find_curve(move.over);
  if (!over) throw std::invalid_argument("unknown over-curve: " + move.over);
  if (over->framing != 0)
    throw std::invalid_argument("slides only run over 0-framed curves");
  if (move.sign != 1 && move.sign != -1)
    throw std::invalid_argument("slide sign must be +-1");

  DiagramState out = state;
  Curve* slid = out.find_curve(move.slid);
  if (!slid) throw std::invalid_argument("unknown slid curve: " + move.slid);
  Word addend = move.sign > 0 ? over->word : over->word.inverse();
  slid->word = slid->word * addend.conjugated_by(move.band);
  return out;
}

DiagramState delete_dotted(const DiagramState& state, const std::string& name) {
  auto id = state.context().find(name);
  if (!id || !state.dotted().contains(*id))
    throw std::invalid_argument("unknown dotted component: " + name);
  DiagramState out = state;
  out.dotted().erase(*id);
  for (Curve& c : out.curves()) c.word = substitute(c.word, *id, Word{});
  return out;
}

WndlCheck wndl_check(const Word& gamma, int n) {
  WndlCheck out;
  out.free_trivial = gamma.empty();
  out.milnor_trivial = is_trivial_mf(gamma, n);
  return out;
}

namespace {

DiagramState engel_base_state(const ElementaryCommutator& c) {
  if (!c.link_realizable())
    throw std::invalid_argument("state not of elementary Engel shape");
  DiagramState st;
  for (int g = 1; g <= 4; ++g) st.context().declare("x" + std::to_string(g));
  return st;
}

}  // namespace

DiagramState engel_diagram_state(const ElementaryCommutator& c) {
  DiagramState st = engel_base_state(c);
  for (int g = 1; g <= 4; ++g) st.dotted().insert(g);
  st.curves().push_back({"gamma", c.word, 0, CurveRole::Gamma, 0});
  for (int i = 1; i <= 4; ++i)
    st.curves().push_back({"b" + std::to_string(i), Word{}, 0, CurveRole::Dual, 0});
  return st;
}

DiagramState engel_link_state(const ElementaryCommutator& c) {
  DiagramState st = engel_base_state(c);
  for (int g = 1; g <= 4; ++g)
    st.curves().push_back({st.context().name(g), Word{}, 0, CurveRole::EngelComponent, g});
  st.curves().push_back({"gamma", c.word, 0, CurveRole::Gamma, 0});
  st.register_parallel(st.context().name(c.product.first),
                       st.context().name(c.product.second));
  return st;
}

SlidePropertyReport engel_slide_property(const DiagramState& state) {
  SlidePropertyReport rep;
  rep.scope_note =
      "pre-stabilization word model; trading dotted components for 0-framed "
      "handles is outside the state's category";
  if (state.parallel_pairs().empty())
    throw std::invalid_argument("state not of elementary Engel shape: no parallel pair");
  auto [first, second] = state.parallel_pairs().front();
  const Curve* cp = state.find_curve(first);
  const Curve* cq = state.find_curve(second);
  const Curve* gamma = nullptr;
  for (const Curve& c : state.curves())
    if (c.role == CurveRole::Gamma) gamma = &c;
  if (!cp || !cq || cp->role != CurveRole::EngelComponent ||
      cq->role != CurveRole::EngelComponent || cp->framing != 0 || cq->framing != 0)
    throw std::invalid_argument("state not of elementary Engel shape");
  rep.shape_ok = true;

  // Slide the second pair member along the first with opposite orientation;
  // identical words cancel, so the slid curve reads the unknot word.
  DiagramState slid = slide(state, {second, first, Word{}, -1});

  // The handle-basis rewrite of the slide: the surviving pair handle now
  // runs through both old disks, so old p-letters read p*q^-1 and the
  // paired passages p*q collapse to p.
  int p = cp->meridian;
  int q = cq->meridian;
  Word image = Word::generator(p) * Word::generator(q, -1);
  for (Curve& c : slid.curves())
    if (c.name != second) c.word = substitute(c.word, p, image);

  rep.split_component = second;
  rep.split_word_empty = slid.find_curve(second)->word.empty();
  rep.meridian_vanished = true;
  for (const Curve& c : slid.curves()) {
    if (c.name == second) continue;
    for (const Letter& l : c.word.letters())
      if (l.gen == q) rep.meridian_vanished = false;
  }
  if (gamma) rep.gamma_after = slid.find_curve(gamma->name)->word;
  if (!rep.split_word_empty || !rep.meridian_vanished) return rep;

  // Remaining data as a link model: the surviving component circles plus the
  // distinguished curve as a component of its own.
  LinkModel rest;
  std::vector<std::pair<int, int>> id_map;  // state gen -> model meridian
  for (const Curve& c : slid.curves()) {
    if (c.role != CurveRole::EngelComponent || c.name == second) continue;
    int mid = rest.meridians().declare(c.name);
    id_map.emplace_back(c.meridian, mid);
    rest.components().push_back({mid, c.word, 0, c.name});
  }
  if (gamma) {
    int mid = rest.meridians().declare("gamma");
    rest.components().push_back({mid, slid.find_curve(gamma->name)->word, 0, "gamma"});
  }
  for (Component& c : rest.components()) {
    // Renumber into the model's context; ids are assigned in curve order.
    Word result;
    for (const Letter& l : c.longitude.letters()) {
      int mapped = 0;
      for (auto [from, to] : id_map)
        if (from == l.gen) mapped = to;
      if (mapped == 0)
        throw std::invalid_argument("curve word mentions a handle outside the state");
      result = result * Word::generator(mapped, l.sign);
    }
    c.longitude = result;
  }
  rest.set_provenance("engel-slide-remainder");

  rep.remainder_h_trivial = h_trivial(rest);
  rep.remainder_class = classify(rest);
  rep.holds = rep.split_word_empty && rep.meridian_vanished && rep.remainder_h_trivial;
  return rep;
}

// ---------------------------------------------------------------------------
// Scripts

namespace {

CurveRole role_from(const std::string& s) {
  if (s == "gamma") return CurveRole::Gamma;
  if (s == "component") return CurveRole::EngelComponent;
  if (s == "dual") return CurveRole::Dual;
  if (s == "correction") return CurveRole::Correction;
  throw std::invalid_argument("unknown curve role: " + s);
}

}  // namespace

ScriptResult run_script(std::istream& in) {
  ScriptResult res;
  std::ostringstream transcript;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string cmd;
    if (!(ls >> cmd) || cmd.starts_with("#")) continue;
    try {
      if (cmd == "dotted") {
        std::string name;
        while (ls >> name) {
          int id = res.state.context().find(name)
                       ? *res.state.context().find(name)
                       : res.state.context().declare(name);
          res.state.dotted().insert(id);
        }
      } else if (cmd == "curve") {
        std::string name, word_text, extra;
        if (!(ls >> name >> word_text)) throw std::invalid_argument("curve needs a name and a word");
        Curve c;
        c.name = name;
        c.word = parse_word(word_text, res.state.context(), /*auto_declare=*/true);
        while (ls >> extra) {
          if (std::isdigit(static_cast<unsigned char>(extra[0])) || extra[0] == '-')
            c.framing = std::stoi(extra);
          else
            c.role = role_from(extra);
        }
        res.state.curves().push_back(std::move(c));
      } else if (cmd == "parallel") {
        std::string a, b;
        if (!(ls >> a >> b)) throw std::invalid_argument("parallel needs two curve names");
        res.state.register_parallel(a, b);
      } else if (cmd == "slide") {
        std::string slid, kw_over, over, kw_band, band, kw_sign, sgn;
        if (!(ls >> slid >> kw_over >> over >> kw_band >> band >> kw_sign >> sgn) ||
            kw_over != "over" || kw_band != "band" || kw_sign != "sign")
          throw std::invalid_argument("expected: slide <curve> over <curve> band <word> sign <+|->");
        SlideMove move;
        move.slid = slid;
        move.over = over;
        move.band = parse_word(band, res.state.context(), /*auto_declare=*/true);
        move.sign = sgn == "+" ? +1 : sgn == "-" ? -1 : 0;
        res.state = slide(res.state, move);
      } else if (cmd == "delete") {
        std::string name;
        if (!(ls >> name)) throw std::invalid_argument("delete needs a name");
        res.state = delete_dotted(res.state, name);
      } else if (cmd == "report") {
        transcript << "dotted:";
        for (int id : res.state.dotted()) transcript << ' ' << res.state.context().name(id);
        transcript << '\n';
        for (const Curve& c : res.state.curves())
          transcript << "curve " << c.name << " [" << to_string(c.role)
                     << ", framing " << c.framing
                     << "] = " << to_string(c.word, res.state.context()) << '\n';
      } else {
        throw std::invalid_argument("unknown command: " + cmd);
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("script line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  res.transcript = transcript.str();
  return res;
}

}  // namespace engelkit
