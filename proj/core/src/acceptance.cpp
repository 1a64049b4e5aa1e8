#include "engelkit/acceptance.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "engelkit/decomp.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/links.hpp"
#include "engelkit/magnus.hpp"
#include "engelkit/milnor.hpp"
#include "engelkit/slides.hpp"
#include "engelkit/zlattice.hpp"

namespace engelkit {

namespace {

Word random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  int l = len(rng);
  for (int i = 0; i < l; ++i) letters.push_back({gen(rng), coin(rng) ? 1 : -1});
  return Word::from_letters(letters);
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

// --- 1: defining relators die, the double commutator survives ------------

CriterionResult criterion_relators() {
  Check c;
  std::mt19937_64 rng(1001);
  const int n = 4;
  for (int i = 1; i <= n; ++i) {
    for (int trial = 0; trial < 50; ++trial) {
      Word y = random_word(rng, n, 12);
      Word rel = commutator(Word::generator(i), Word::generator(i).conjugated_by(y));
      c.expect(reduced_expand(rel, n).is_one(),
               "relator survived for i=" + std::to_string(i));
    }
  }
  Word gamma = commutator(commutator(Word::generator(1), Word::generator(2)),
                          commutator(Word::generator(3), Word::generator(4)));
  c.expect(reduced_expand(gamma, n).coefficient({1, 2, 3, 4}) == 1,
           "leading coefficient of the double commutator is not +1");
  return {1, "Milnor relator death & gamma nontriviality", c.ok, c.detail.str(), 0};
}

// --- 2: class probe -------------------------------------------------------

CriterionResult criterion_class_probe() {
  Check c;
  for (int n = 2; n <= 4; ++n) {
    ClassProbeReport rep = milnor_class_probe(n);
    c.expect(rep.passed, "probe failed at n=" + std::to_string(n));
  }
  return {2, "Milnor class probe (n = 2, 3, 4)", c.ok, c.detail.str(), 0};
}

// --- 3: class-3 certificates ----------------------------------------------

CriterionResult criterion_class3() {
  Check c;
  for (int n = 2; n <= 4; ++n) {
    Class3Report rep = certify_class3(n, kDefaultEngelDepth);
    c.expect(rep.complete, "uncertified targets at n=" + std::to_string(n));
    for (const Class3Target& t : rep.targets) {
      if (!t.certificate) continue;
      c.expect(verify_certificate(*t.certificate, n),
               "re-verification failed at n=" + std::to_string(n));
    }
  }
  return {3, "2-Engel nilpotency certificates (all 4-fold commutators)", c.ok,
          c.detail.str(), 0};
}

// --- 4: decomposition pipeline --------------------------------------------

CriterionResult criterion_decomposition() {
  Check c;
  Word gamma = commutator(commutator(Word::generator(1), Word::generator(2)),
                          commutator(Word::generator(3), Word::generator(4)));
  try {
    DecompositionCertificate cert = decompose_gamma(gamma, 4);
    c.expect(cert.verified && cert.correction_trivial, "round trip failed at n=4");
    c.expect(!cert.factors.empty(), "empty factor list for a nontrivial curve");
  } catch (const std::exception& e) {
    c.expect(false, std::string("n=4 pipeline: ") + e.what());
  }
  try {
    Word gamma8 = attach_curve_word({2, 1, 1, 1, 1});
    DecompositionCertificate cert = decompose_gamma(gamma8, 8);
    c.expect(cert.verified && cert.correction_trivial, "round trip failed at n=8");
  } catch (const std::exception& e) {
    c.expect(false, std::string("n=8 pipeline: ") + e.what());
  }
  return {4, "Attaching-curve decomposition & correction word", c.ok, c.detail.str(), 0};
}

// --- 5: Whitehead-link taxonomy -------------------------------------------

CriterionResult criterion_taxonomy() {
  Check c;
  LinkModel wh = build("wh(+)");
  c.expect(classify(wh) == LinkClass::HTrivialPlus, "Wh not h-trivial-plus");
  LinkModel one_copy = par(wh, 1);
  c.expect(classify(one_copy) == LinkClass::HTrivialNotPlus,
           "Wh + one parallel copy misclassified");
  LinkModel both_copies = par(one_copy, 2);
  c.expect(classify(both_copies) == LinkClass::HEssential,
           "Wh + both parallel copies misclassified");
  return {5, "Parallel-copy taxonomy of the Whitehead link", c.ok, c.detail.str(), 0};
}

// --- 6: family dichotomy ---------------------------------------------------

CriterionResult criterion_families() {
  Check c;
  using Seed = FamilySpec::Seed;
  struct Member {
    FamilySpec spec;
    LinkClass expected;  // classification of the underlying link
    std::string label;
  };
  std::vector<Member> members;
  auto add = [&](Seed seed, std::vector<FamilySpec::BingOp> ops, LinkClass expect,
                 std::string label) {
    FamilySpec s;
    s.seed = seed;
    s.bing_ops = std::move(ops);
    members.push_back({std::move(s), expect, std::move(label)});
  };
  add(Seed::Hopf, {{1, 1}}, LinkClass::HEssential, "bing(hopf,1)");
  add(Seed::Hopf, {{2, 1}}, LinkClass::HEssential, "bing(hopf,2)");
  add(Seed::Hopf, {{1, 1}, {1, 1}}, LinkClass::HEssential, "bing^2(hopf)");
  add(Seed::Hopf, {{1, 1}, {3, 1}}, LinkClass::HEssential, "bing both halves");
  add(Seed::Hopf, {{1, 2}}, LinkClass::HEssential, "ramified bing(hopf)");
  add(Seed::Hopf, {{1, 1}, {2, 2}}, LinkClass::HEssential, "mixed ramified hopf");
  add(Seed::Wh, {{1, 1}, {3, 1}}, LinkClass::HTrivialPlus, "bing(Wh) both components");
  // Ramification with multiplicity >= 2 on both clasp components: the
  // parallel-copy mechanism survives the doubling.
  add(Seed::Wh, {{1, 2}, {3, 2}}, LinkClass::HEssential, "ram-2/2 bing(Wh)");
  add(Seed::Wh, {{1, 2}, {3, 3}}, LinkClass::HEssential, "ram-2/3 bing(Wh)");
  add(Seed::Wh, {{1, 3}, {3, 2}}, LinkClass::HEssential, "ram-3/2 bing(Wh)");

  for (const Member& m : members) {
    LinkModel underlying = family_underlying(m.spec);
    c.expect(classify(underlying) == m.expected,
             m.label + ": underlying classified " + to_string(classify(underlying)) +
                 ", expected " + to_string(m.expected));
    // Pairwise linking numbers vanish throughout the families; degree-1
    // coefficients are exponent sums, no expansion needed.
    for (int i = 1; i <= underlying.size() && c.ok; ++i)
      for (int j = 1; j <= underlying.size(); ++j) {
        if (i == j) continue;
        if (exponent_sum(underlying.at(i).longitude, underlying.at(j).meridian) != 0) {
          c.expect(false, m.label + ": nonzero linking number in the underlying link");
          break;
        }
      }
  }

  // Fully doubled members stay word-level feasible at the small end of the
  // family; check the doubled links there.
  for (std::size_t mi : {std::size_t{0}, std::size_t{1}}) {
    FamilyMember built = family(members[mi].spec);
    for (int i = 1; i <= built.link.size() && c.ok; ++i)
      for (int j = 1; j <= built.link.size(); ++j) {
        if (i == j) continue;
        if (exponent_sum(built.link.at(i).longitude, built.link.at(j).meridian) != 0) {
          c.expect(false, members[mi].label + ": nonzero linking number after doubling");
          break;
        }
      }
  }
  return {6, "Doubling-family dichotomy (10-member sweep)", c.ok, c.detail.str(), 0};
}

// --- 7: slide property ------------------------------------------------------

CriterionResult criterion_slide_property() {
  Check c;
  int realizable = 0;
  for (const ElementaryCommutator& ec : elementary_commutators(4)) {
    if (!ec.link_realizable()) continue;
    ++realizable;
    SlidePropertyReport rep = engel_slide_property(engel_link_state(ec));
    c.expect(rep.holds, "slide property failed for an elementary state");
    if (!c.ok) break;
  }
  c.expect(realizable > 0, "no realizable elementary commutators enumerated");
  return {7, "Elementary Engel slide property (all 4-generator states)", c.ok,
          c.detail.str(), 0};
}

// --- 8: deletion instances --------------------------------------------------

CriterionResult criterion_wndl_instances() {
  Check c;
  for (const ElementaryCommutator& ec : elementary_commutators(4)) {
    if (!ec.link_realizable()) continue;
    DiagramState state = engel_diagram_state(ec);
    for (int g : {ec.product.first, ec.product.second}) {
      DiagramState after = delete_dotted(state, state.context().name(g));
      WndlCheck w = wndl_check(after.find_curve("gamma")->word, 4);
      c.expect(!w.free_trivial, "deleted pair generator left a freely trivial word");
      c.expect(w.milnor_trivial, "deleted pair generator left a Milnor-nontrivial word");
      if (!c.ok) return {8, "Deletion hypothesis instances", c.ok, c.detail.str(), 0};
    }
  }
  return {8, "Deletion hypothesis instances (exhaustive over 4 generators)", c.ok,
          c.detail.str(), 0};
}

// --- 9: property suites ------------------------------------------------------

std::vector<Int> minor_gcd_oracle(const IntMatrix& a) {
  int n = std::min(a.rows(), a.cols());
  std::vector<Int> det_gcd(static_cast<std::size_t>(n) + 1);
  det_gcd[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Int g = 0;
    std::vector<int> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(k));
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
      if (depth == k) {
        std::function<void(int, int)> pick_cols = [&](int cstart, int cdepth) {
          if (cdepth == k) {
            IntMatrix sub(k, k);
            for (int i = 0; i < k; ++i)
              for (int j = 0; j < k; ++j)
                sub.at(i, j) = a.at(rows[static_cast<std::size_t>(i)],
                                    cols[static_cast<std::size_t>(j)]);
            g = gcd(g, determinant(sub));
            return;
          }
          for (int x = cstart; x < a.cols(); ++x) {
            cols[static_cast<std::size_t>(cdepth)] = x;
            pick_cols(x + 1, cdepth + 1);
          }
        };
        pick_cols(0, 0);
        return;
      }
      for (int x = start; x < a.rows(); ++x) {
        rows[static_cast<std::size_t>(depth)] = x;
        pick_rows(x + 1, depth + 1);
      }
    };
    pick_rows(0, 0);
    det_gcd[static_cast<std::size_t>(k)] = g;
  }
  std::vector<Int> factors;
  for (int k = 1; k <= n; ++k) {
    const Int& cur = det_gcd[static_cast<std::size_t>(k)];
    if (cur == 0) break;
    factors.push_back(cur / det_gcd[static_cast<std::size_t>(k - 1)]);
  }
  return factors;
}

LinkModel random_dsl_link(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> base_pick(0, 2);
  std::uniform_int_distribution<int> ops(0, 3);
  LinkModel l;
  switch (base_pick(rng)) {
    case 0: l = hopf(); break;
    case 1: l = unlink(2 + static_cast<int>(rng() % 2)); break;
    default: l = build("wh(+)"); break;
  }
  int count = ops(rng);
  for (int i = 0; i < count; ++i) {
    if (l.size() >= 7) break;
    int pos = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(l.size()));
    switch (rng() % 4) {
      case 0: l = par(l, pos); break;
      case 1: l = bing(l, pos); break;
      case 2: l = whd(l, pos, rng() % 2 ? +1 : -1); break;
      default: l = ram(l, pos, 2); break;
    }
  }
  return l;
}

CriterionResult criterion_property_suites() {
  Check c;

  // Magnus homomorphism and inverse laws.
  {
    std::mt19937_64 rng(9001);
    std::uniform_int_distribution<int> npick(1, 4), dpick(1, 5);
    for (int i = 0; i < 1000 && c.ok; ++i) {
      int n = npick(rng), d = dpick(rng);
      Word u = random_word(rng, n, 12), v = random_word(rng, n, 12);
      c.expect(expand(u * v, d) == expand(u, d) * expand(v, d),
               "homomorphism law failed");
      c.expect((expand(u, d) * expand(u.inverse(), d)).is_one(), "inverse law failed");
    }
  }

  // mu-bar conjugation invariance and sublink consistency.
  {
    std::mt19937_64 rng(9002);
    for (int i = 0; i < 200 && c.ok; ++i) {
      LinkModel l = random_dsl_link(rng);
      int k = l.size();
      // Conjugate one longitude by a random word over the meridians.
      int cpos = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(k));
      LinkModel conj = l;
      Word g = random_word(rng, l.meridians().size(), 4);
      conj.components()[static_cast<std::size_t>(cpos - 1)].longitude =
          l.at(cpos).longitude.conjugated_by(g);
      std::function<void(std::vector<int>&, int)> tuples = [&](std::vector<int>& acc,
                                                               int maxlen) {
        if (static_cast<int>(acc.size()) >= 2) {
          MuBar orig = mu_bar(l, acc);
          if (orig.valid) {
            MuBar moved = mu_bar(conj, acc);
            c.expect(moved.value == orig.value && moved.valid,
                     "conjugation changed a valid mu-bar");
          }
        }
        if (static_cast<int>(acc.size()) == maxlen || !c.ok) return;
        for (int next = 1; next <= k; ++next) {
          if (std::find(acc.begin(), acc.end(), next) != acc.end()) continue;
          acc.push_back(next);
          tuples(acc, maxlen);
          acc.pop_back();
        }
      };
      std::vector<int> acc;
      tuples(acc, std::min(k, 3));

      if (k >= 3) {
        int dpos = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(k));
        LinkModel sub = delete_component(l, dpos);
        for (int a = 1; a <= sub.size() && c.ok; ++a)
          for (int b = 1; b <= sub.size(); ++b) {
            if (a == b) continue;
            int pa = a < dpos ? a : a + 1;
            int pb = b < dpos ? b : b + 1;
            std::vector<int> sub_idx{a, b}, amb_idx{pa, pb};
            if (mu_bar(sub, sub_idx).value != mu_bar(l, amb_idx).value) {
              c.expect(false, "sublink mu-bar mismatch after deletion");
              break;
            }
          }
      }
    }
  }

  // Normal-form invariant factors against the minor-gcd oracle.
  {
    std::mt19937_64 rng(9003);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
    for (int i = 0; i < 500 && c.ok; ++i) {
      IntMatrix a(dim(rng), dim(rng));
      for (int r = 0; r < a.rows(); ++r)
        for (int cc = 0; cc < a.cols(); ++cc) a.at(r, cc) = entry(rng);
      c.expect(invariant_factors(a) == minor_gcd_oracle(a),
               "invariant factors disagree with the minor-gcd oracle");
    }
  }

  // Slide reversibility.
  {
    std::mt19937_64 rng(9004);
    for (int i = 0; i < 200 && c.ok; ++i) {
      DiagramState st;
      for (int g = 1; g <= 4; ++g) st.context().declare("x" + std::to_string(g));
      for (int g = 1; g <= 4; ++g) st.dotted().insert(g);
      int curves = 2 + static_cast<int>(rng() % 3);
      for (int j = 0; j < curves; ++j)
        st.curves().push_back({"c" + std::to_string(j), random_word(rng, 4, 6), 0,
                               CurveRole::Correction, 0});
      SlideMove move;
      move.slid = "c0";
      move.over = "c" + std::to_string(1 + rng() % (curves - 1));
      move.band = random_word(rng, 4, 3);
      move.sign = rng() % 2 ? +1 : -1;
      DiagramState once = slide(st, move);
      SlideMove back = move;
      back.sign = -move.sign;
      DiagramState round = slide(once, back);
      bool same = round.curves().size() == st.curves().size();
      for (std::size_t j = 0; same && j < st.curves().size(); ++j)
        same = round.curves()[j].word == st.curves()[j].word;
      c.expect(same, "slide followed by its reverse changed the state");
    }
  }

  return {9, "Property suites (fixed seeds)", c.ok, c.detail.str(), 0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  using Clock = std::chrono::steady_clock;
  std::vector<std::function<CriterionResult()>> criteria = {
      criterion_relators,      criterion_class_probe,    criterion_class3,
      criterion_decomposition, criterion_taxonomy,       criterion_families,
      criterion_slide_property, criterion_wndl_instances, criterion_property_suites,
  };
  std::vector<CriterionResult> out;
  for (auto& fn : criteria) {
    auto start = Clock::now();
    CriterionResult r = fn();
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (progress) {
      (*progress) << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.name;
      if (!r.passed && !r.detail.empty()) (*progress) << " -- " << r.detail;
      char buf[32];
      std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
      (*progress) << buf << '\n';
      progress->flush();
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace engelkit
