#include <doctest.h>

#include <algorithm>
#include <set>

#include "engelkit/engel.hpp"
#include "engelkit/json_io.hpp"

using namespace engelkit;

namespace {

Word gen(int i) { return Word::generator(i); }

Word left_normed_of(const std::vector<int>& idx) {
  std::vector<Word> parts;
  for (int i : idx) parts.push_back(gen(i));
  return left_normed_commutator(parts);
}

}  // namespace

TEST_CASE("instance enumeration at depth one") {
  auto instances = engel_instances(2, 1);
  std::set<Word> words;
  for (const auto& inst : instances) words.insert(inst.word);
  CHECK(words.contains(commutator(gen(1), gen(1).conjugated_by(gen(2)))));
  CHECK(words.contains(commutator(gen(2), gen(2).conjugated_by(gen(1)))));
  // No instance uses a length-2 base at depth 1.
  for (const auto& inst : instances) CHECK(inst.base.length() <= 1);
}

TEST_CASE("instance enumeration at depth two includes product bases") {
  auto instances = engel_instances(2, 2);
  Word base = gen(1) * gen(2);
  Word expected = commutator(base, base.conjugated_by(gen(1)));
  bool found = false;
  for (const auto& inst : instances) found = found || inst.word == expected;
  CHECK(found);
}

TEST_CASE("instances sit at lower-central depth three or deeper") {
  for (int n : {2, 3}) {
    auto instances = engel_instances(n, 2);
    for (const auto& inst : instances) {
      auto low = lcs_degree(inst.word, 4);
      if (low) CHECK(*low >= 3);
    }
  }
}

TEST_CASE("instances are deduplicated as reduced words") {
  auto instances = engel_instances(2, 2);
  std::set<Word> words;
  for (const auto& inst : instances) CHECK(words.insert(inst.word).second);
}

TEST_CASE("a defining word certifies at small depth") {
  // [y, x, x] = [[y,x],x] for single generators
  Word target = left_normed_of({2, 1, 1});
  EngelDecision dec = is_trivial_engel(target, 2, 2);
  REQUIRE(dec.kind == EngelTriviality::CertifiedTrivial);
  REQUIRE(dec.certificate.has_value());
  CHECK(dec.certificate->verified);
  CHECK(verify_certificate(*dec.certificate, 2));
}

TEST_CASE("degree-one content is an obstruction") {
  EngelDecision dec = is_trivial_engel(gen(1), 2, 2);
  CHECK(dec.kind == EngelTriviality::Nontrivial);
  REQUIRE(dec.obstruction.has_value());
  CHECK(dec.obstruction->degree == 1);
  CHECK(dec.obstruction->coefficient != 0);
}

TEST_CASE("plain commutators survive the quotient") {
  EngelDecision dec = is_trivial_engel(commutator(gen(1), gen(2)), 2, 2);
  CHECK(dec.kind == EngelTriviality::Nontrivial);
  REQUIRE(dec.obstruction.has_value());
  CHECK(dec.obstruction->degree == 2);
}

TEST_CASE("mixed triple commutators survive (the exponent-3 layer)") {
  // [x1,x2,x3] is not killed over Z by the polarized relations.
  EngelDecision dec = is_trivial_engel(left_normed_of({1, 2, 3}), 3, 2);
  CHECK(dec.kind == EngelTriviality::Nontrivial);
  REQUIRE(dec.obstruction.has_value());
  CHECK(dec.obstruction->degree == 3);
}

TEST_CASE("four-fold commutators certify") {
  Word target = left_normed_of({1, 2, 1, 2});
  EngelDecision dec = is_trivial_engel(target, 2, kDefaultEngelDepth);
  REQUIRE(dec.kind == EngelTriviality::CertifiedTrivial);
  CHECK(dec.certificate->verified);
}

TEST_CASE("certify_class3 completes at n = 2") {
  Class3Report rep = certify_class3(2, kDefaultEngelDepth);
  CHECK(rep.complete);
  CHECK(rep.targets.size() == 16);
  for (const Class3Target& t : rep.targets) {
    REQUIRE(t.certificate.has_value());
    CHECK(t.certificate->verified);
    CHECK(verify_certificate(*t.certificate, 2));
  }
}

TEST_CASE("certified verdicts are monotone in depth") {
  for (const std::vector<int>& idx :
       {std::vector<int>{2, 1, 1}, std::vector<int>{1, 2, 1, 2}}) {
    Word target = left_normed_of(idx);
    EngelDecision shallow = is_trivial_engel(target, 2, 2);
    EngelDecision deep = is_trivial_engel(target, 2, 3);
    if (shallow.kind == EngelTriviality::CertifiedTrivial)
      CHECK(deep.kind == EngelTriviality::CertifiedTrivial);
  }
}

TEST_CASE("degree-3 lattice contains three times the basic commutators") {
  GradedPresentation pres = build_graded_presentation(3, 2);
  const IntMatrix& lat = pres.relation_lattice[3];
  REQUIRE(lat.cols() == 27);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        Word basic = left_normed_of({i, j, k});
        TruncSeries s = expand(basic, 3);
        std::vector<Int> v(27);
        for (const auto& [m, c] : s.terms()) {
          if (m.size() != 3) continue;
          int rank = (m[0] - 1) * 9 + (m[1] - 1) * 3 + (m[2] - 1);
          v[static_cast<std::size_t>(rank)] = 3 * c;
        }
        CHECK(lattice_member(lat, v));
      }
}

TEST_CASE("graded presentation shape") {
  GradedPresentation pres = build_graded_presentation(2, 2);
  CHECK(pres.relation_lattice[1].rows() == 0);
  CHECK(pres.relation_lattice[2].rows() == 0);
  CHECK(pres.relation_lattice[3].cols() == 8);
  CHECK(pres.relation_lattice[4].cols() == 16);
  CHECK(pres.relation_lattice[4].rows() > 0);
}

TEST_CASE("certificate JSON schema") {
  GeneratorContext ctx = GeneratorContext::numbered("x", 2);
  EngelDecision dec = is_trivial_engel(left_normed_of({2, 1, 1}), 2, 2);
  REQUIRE(dec.certificate.has_value());
  nlohmann::json j = certificate_json(*dec.certificate, ctx);
  CHECK(j.contains("target"));
  CHECK(j.contains("factors"));
  CHECK(j["verified"] == true);
  for (const auto& f : j["factors"]) {
    CHECK(f.contains("instance"));
    CHECK(f.contains("conjugator"));
    CHECK(f.contains("exp"));
  }
}
