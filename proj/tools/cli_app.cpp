#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "engelkit/acceptance.hpp"
#include "engelkit/decomp.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/json_io.hpp"
#include "engelkit/links.hpp"
#include "engelkit/magnus.hpp"
#include "engelkit/milnor.hpp"
#include "engelkit/slides.hpp"
#include "engelkit/words.hpp"

namespace engelkit::cli {

namespace {

constexpr const char* kSchema = "engelkit/1";

int default_depth() {
  if (const char* env = std::getenv("ENGELKIT_DEPTH")) {
    int d = std::atoi(env);
    if (d >= 1) return d;
  }
  return kDefaultEngelDepth;
}

void emit(std::ostream& out, nlohmann::json j) {
  j["schema"] = kSchema;
  out << j.dump(2) << '\n';
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

struct Options {
  bool json = false;

  std::string word_expr;

  std::string magnus_expr;
  int magnus_degree = 4;
  bool magnus_reduced = false;
  int magnus_n = 0;

  int milnor_n = 2;
  std::string milnor_gens;
  std::string milnor_expr;
  std::string milnor_expr2;

  int engel_n = 2;
  int engel_depth = default_depth();
  std::string engel_target;

  std::string decomp_gamma;
  int decomp_n = 4;

  std::string link_dsl;
  std::string link_index;

  std::string slide_script;

  std::string wndl_gamma;
  int wndl_n = 4;
};

GeneratorContext meridian_context(int n, const std::string& gens) {
  if (gens.empty()) return GeneratorContext::numbered("m", n);
  GeneratorContext ctx;
  std::stringstream ss(gens);
  std::string name;
  while (std::getline(ss, name, ',')) ctx.declare(name);
  return ctx;
}

int run_word(const Options& opt, std::ostream& out) {
  GeneratorContext ctx;
  Word w = parse_word(opt.word_expr, ctx, /*auto_declare=*/true);
  if (opt.json) {
    nlohmann::json j;
    j["input"] = opt.word_expr;
    j["word"] = to_string(w, ctx);
    j["length"] = w.length();
    emit(out, j);
  } else {
    out << to_string(w, ctx) << '\n';
  }
  return 0;
}

int run_magnus(const Options& opt, std::ostream& out) {
  GeneratorContext ctx;
  Word w = parse_word(opt.magnus_expr, ctx, /*auto_declare=*/true);
  nlohmann::json j;
  std::string text;
  if (opt.magnus_reduced) {
    int n = opt.magnus_n > 0 ? opt.magnus_n : ctx.size();
    if (n < 1) n = 1;
    ReducedSeries s = reduced_expand(w, n);
    j = series_json(s);
  } else {
    TruncSeries s = expand(w, opt.magnus_degree);
    j = series_json(s);
  }
  if (opt.json) {
    emit(out, j);
  } else {
    out << j.dump(2) << '\n';
  }
  return 0;
}

int run_milnor_trivial(const Options& opt, std::ostream& out) {
  GeneratorContext ctx = meridian_context(opt.milnor_n, opt.milnor_gens);
  Word w = parse_word(opt.milnor_expr, ctx);
  bool trivial = is_trivial_mf(w, ctx.size());
  if (opt.json) {
    nlohmann::json j;
    j["word"] = to_string(w, ctx);
    j["n"] = ctx.size();
    j["trivial"] = trivial;
    emit(out, j);
  } else {
    out << (trivial ? "trivial" : "nontrivial") << '\n';
  }
  return trivial ? 0 : 1;
}

int run_milnor_equal(const Options& opt, std::ostream& out) {
  GeneratorContext ctx = meridian_context(opt.milnor_n, opt.milnor_gens);
  Word u = parse_word(opt.milnor_expr, ctx);
  Word v = parse_word(opt.milnor_expr2, ctx);
  bool equal = equal_mf(u, v, ctx.size());
  if (opt.json) {
    nlohmann::json j;
    j["left"] = to_string(u, ctx);
    j["right"] = to_string(v, ctx);
    j["n"] = ctx.size();
    j["equal"] = equal;
    emit(out, j);
  } else {
    out << (equal ? "equal" : "distinct") << '\n';
  }
  return equal ? 0 : 1;
}

int run_milnor_probe(const Options& opt, std::ostream& out) {
  GeneratorContext ctx = meridian_context(opt.milnor_n, opt.milnor_gens);
  ClassProbeReport rep = milnor_class_probe(ctx.size());
  if (opt.json) {
    emit(out, probe_json(rep, ctx));
  } else {
    out << "witness " << to_string(rep.witness, ctx) << ": "
        << (rep.witness_nontrivial ? "nontrivial" : "trivial") << '\n'
        << "longer commutators trivial: " << rep.trivial << "/" << rep.checked
        << (rep.exhaustive ? " (exhaustive)" : " (sampled)") << '\n'
        << (rep.passed ? "passed" : "failed") << '\n';
  }
  return rep.passed ? 0 : 1;
}

int run_engel(const Options& opt, std::ostream& out) {
  GeneratorContext ctx = GeneratorContext::numbered("x", opt.engel_n);
  if (!opt.engel_target.empty()) {
    Word target = parse_word(opt.engel_target, ctx);
    EngelDecision dec = is_trivial_engel(target, opt.engel_n, opt.engel_depth);
    const char* verdict = dec.kind == EngelTriviality::CertifiedTrivial
                              ? "certified-trivial"
                              : dec.kind == EngelTriviality::Nontrivial
                                    ? "nontrivial"
                                    : "unknown-at-depth";
    if (opt.json) {
      nlohmann::json j;
      j["target"] = to_string(target, ctx);
      j["verdict"] = verdict;
      if (dec.certificate) j["certificate"] = certificate_json(*dec.certificate, ctx);
      if (dec.obstruction) {
        j["obstruction"]["degree"] = dec.obstruction->degree;
        j["obstruction"]["mono"] = dec.obstruction->monomial;
        j["obstruction"]["coef"] = dec.obstruction->coefficient.str();
      }
      emit(out, j);
    } else {
      out << verdict << '\n';
    }
    return dec.kind == EngelTriviality::CertifiedTrivial ? 0 : 1;
  }

  Class3Report rep = certify_class3(opt.engel_n, opt.engel_depth);
  if (opt.json) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["depth"] = rep.depth;
    j["complete"] = rep.complete;
    j["certificates"] = nlohmann::json::array();
    for (const Class3Target& t : rep.targets) {
      nlohmann::json tj;
      tj["indices"] = t.indices;
      tj["target"] = to_string(t.word, ctx);
      if (t.certificate) tj["certificate"] = certificate_json(*t.certificate, ctx);
      else tj["certificate"] = nullptr;
      j["certificates"].push_back(std::move(tj));
    }
    emit(out, j);
  } else {
    int certified = 0;
    for (const Class3Target& t : rep.targets)
      if (t.certificate && t.certificate->verified) ++certified;
    out << "targets: " << rep.targets.size() << ", certified: " << certified << '\n';
    out << (rep.complete ? "complete" : "insufficient depth") << '\n';
  }
  return rep.complete ? 0 : 1;
}

int run_decompose(const Options& opt, std::ostream& out) {
  GeneratorContext ctx = GeneratorContext::numbered("m", opt.decomp_n);
  Word gamma = parse_word(opt.decomp_gamma, ctx);
  DecompositionCertificate cert = decompose_gamma(gamma, opt.decomp_n);
  if (opt.json) {
    emit(out, certificate_json(cert, ctx));
  } else {
    out << "factors: " << cert.factors.size() << '\n';
    for (const DecompFactor& f : cert.factors)
      out << "  " << to_string(f.commutator.word, ctx) << " ^ " << f.exponent.str()
          << '\n';
    out << "correction: " << to_string(cert.correction, ctx) << '\n';
    out << (cert.verified ? "verified" : "unverified") << '\n';
  }
  return cert.verified ? 0 : 1;
}

int run_link(const Options& opt, const std::string& mode, std::ostream& out) {
  LinkModel l = build(opt.link_dsl);
  if (mode == "build") {
    if (opt.json) {
      emit(out, link_json(l));
    } else {
      for (const Component& c : l.components())
        out << c.name << ": " << to_string(c.longitude, l.meridians())
            << " (framing " << c.framing << ")\n";
    }
    return 0;
  }
  if (mode == "classify") {
    LinkClass cls = classify(l);
    if (opt.json) {
      nlohmann::json j;
      j["link"] = to_string(parse_link_expr(opt.link_dsl));
      j["class"] = to_string(cls);
      emit(out, j);
    } else {
      out << to_string(cls) << '\n';
    }
    return 0;
  }
  // mu
  std::vector<int> idx = parse_index_list(opt.link_index);
  MuBar mu = mu_bar(l, idx);
  if (opt.json) {
    nlohmann::json j;
    j["index"] = idx;
    j["value"] = mu.value.str();
    j["valid"] = mu.valid;
    emit(out, j);
  } else {
    out << mu.value.str() << (mu.valid ? " (valid)" : " (not valid)") << '\n';
  }
  return 0;
}

int run_slide(const Options& opt, std::ostream& out) {
  std::ifstream in(opt.slide_script);
  if (!in) throw std::invalid_argument("cannot open script: " + opt.slide_script);
  ScriptResult res = run_script(in);
  out << res.transcript;
  return 0;
}

int run_wndl(const Options& opt, std::ostream& out) {
  GeneratorContext ctx = GeneratorContext::numbered("m", opt.wndl_n);
  Word gamma = parse_word(opt.wndl_gamma, ctx);
  WndlCheck w = wndl_check(gamma, opt.wndl_n);
  if (opt.json) {
    nlohmann::json j;
    j["gamma"] = to_string(gamma, ctx);
    j["free_trivial"] = w.free_trivial;
    j["milnor_trivial"] = w.milnor_trivial;
    j["instance"] = w.instance();
    emit(out, j);
  } else {
    out << "free_trivial: " << (w.free_trivial ? "true" : "false") << '\n'
        << "milnor_trivial: " << (w.milnor_trivial ? "true" : "false") << '\n';
  }
  return w.instance() ? 0 : 1;
}

int run_reproduce(std::ostream& out) {
  auto results = run_acceptance(&out);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact word calculus for Milnor groups, 2-Engel certificates, "
               "doubled links, and word-level handle slides"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "JSON output");

  auto* word = app.add_subcommand("word", "parse and normalize a word expression");
  word->add_option("expr", opt.word_expr, "word expression")->required();

  auto* magnus = app.add_subcommand("magnus", "Magnus expansion of a word");
  magnus->add_option("expr", opt.magnus_expr, "word expression")->required();
  magnus->add_option("--degree", opt.magnus_degree, "truncation degree")
      ->check(CLI::PositiveNumber);
  magnus->add_flag("--reduced", opt.magnus_reduced, "distinct-index expansion");
  magnus->add_option("--n", opt.magnus_n, "generator count for --reduced");

  auto* milnor = app.add_subcommand("milnor", "free Milnor group decisions");
  milnor->require_subcommand(1);
  auto add_milnor_common = [&](CLI::App* sub) {
    sub->add_option("--n", opt.milnor_n, "generator count")->check(CLI::PositiveNumber);
    sub->add_option("--gens", opt.milnor_gens, "comma-separated generator names");
  };
  auto* mt = milnor->add_subcommand("trivial", "triviality in the reduced model");
  add_milnor_common(mt);
  mt->add_option("expr", opt.milnor_expr, "word expression")->required();
  auto* me = milnor->add_subcommand("equal", "equality in the reduced model");
  add_milnor_common(me);
  me->add_option("left", opt.milnor_expr, "word expression")->required();
  me->add_option("right", opt.milnor_expr2, "word expression")->required();
  auto* mp = milnor->add_subcommand("probe", "nilpotency class probe");
  add_milnor_common(mp);

  auto* engel = app.add_subcommand("engel", "2-Engel quotient machinery");
  engel->require_subcommand(1);
  auto* certify = engel->add_subcommand("certify", "nilpotency certificates");
  certify->add_option("--n", opt.engel_n, "generator count")->check(CLI::PositiveNumber);
  certify->add_option("--depth", opt.engel_depth, "instance enumeration depth");
  certify->add_option("--target", opt.engel_target,
                      "certify a single word instead of all 4-fold commutators");

  auto* decomp = app.add_subcommand("decompose", "elementary-commutator decomposition");
  decomp->add_option("--gamma", opt.decomp_gamma, "attaching-curve word")->required();
  decomp->add_option("--n", opt.decomp_n, "generator count");

  auto* link = app.add_subcommand("link", "link construction and classification");
  link->require_subcommand(1);
  auto* lb = link->add_subcommand("build", "build and print the word-level model");
  lb->add_option("dsl", opt.link_dsl, "construction expression")->required();
  auto* lc = link->add_subcommand("classify", "h-triviality classification");
  lc->add_option("dsl", opt.link_dsl, "construction expression")->required();
  auto* lm = link->add_subcommand("mu", "mu-bar invariant");
  lm->add_option("dsl", opt.link_dsl, "construction expression")->required();
  lm->add_option("--index", opt.link_index, "comma-separated component positions")
      ->required();

  auto* slide = app.add_subcommand("slide", "run a slide script");
  slide->add_option("--script", opt.slide_script, "script file")->required();

  auto* wndl = app.add_subcommand("wndl", "hypothesis check for a boundary word");
  wndl->add_option("--gamma", opt.wndl_gamma, "word expression")->required();
  wndl->add_option("--n", opt.wndl_n, "generator count")->check(CLI::PositiveNumber);

  app.add_subcommand("reproduce-paper", "run the full acceptance suite");

  std::vector<const char*> argv;
  argv.push_back("engelkit");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (word->parsed()) return run_word(opt, out);
    if (magnus->parsed()) return run_magnus(opt, out);
    if (milnor->parsed()) {
      if (mt->parsed()) return run_milnor_trivial(opt, out);
      if (me->parsed()) return run_milnor_equal(opt, out);
      return run_milnor_probe(opt, out);
    }
    if (engel->parsed()) return run_engel(opt, out);
    if (decomp->parsed()) return run_decompose(opt, out);
    if (link->parsed()) {
      if (lb->parsed()) return run_link(opt, "build", out);
      if (lc->parsed()) return run_link(opt, "classify", out);
      return run_link(opt, "mu", out);
    }
    if (slide->parsed()) return run_slide(opt, out);
    if (wndl->parsed()) return run_wndl(opt, out);
    return run_reproduce(out);
  } catch (const DecompError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace engelkit::cli
