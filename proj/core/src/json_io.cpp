#include "engelkit/json_io.hpp"

namespace engelkit {

nlohmann::json series_json(const TermMap& terms, int degree_cap) {
  nlohmann::json j;
  j["D"] = degree_cap;
  j["terms"] = nlohmann::json::array();
  for (const auto& [m, c] : terms) {
    nlohmann::json term;
    term["mono"] = m;
    term["coef"] = c.str();
    j["terms"].push_back(std::move(term));
  }
  return j;
}

nlohmann::json series_json(const TruncSeries& s) {
  return series_json(s.terms(), s.degree_cap());
}

nlohmann::json series_json(const ReducedSeries& s) {
  return series_json(s.terms(), s.num_generators());
}

nlohmann::json certificate_json(const EngelCertificate& cert,
                                const GeneratorContext& ctx) {
  nlohmann::json j;
  j["target"] = to_string(cert.target, ctx);
  j["factors"] = nlohmann::json::array();
  for (const CertFactor& f : cert.factors) {
    nlohmann::json fj;
    fj["instance"] = to_string(f.instance, ctx);
    fj["conjugator"] = to_string(f.conjugator, ctx);
    fj["exp"] = f.exponent.str();
    j["factors"].push_back(std::move(fj));
  }
  j["verified"] = cert.verified;
  j["depth"] = cert.depth_used;
  return j;
}

nlohmann::json certificate_json(const DecompositionCertificate& cert,
                                const GeneratorContext& ctx) {
  nlohmann::json j;
  j["target"] = to_string(cert.gamma, ctx);
  j["factors"] = nlohmann::json::array();
  for (const DecompFactor& f : cert.factors) {
    nlohmann::json fj;
    fj["instance"] = to_string(f.commutator.word, ctx);
    fj["conjugator"] = "1";
    fj["exp"] = f.exponent.str();
    j["factors"].push_back(std::move(fj));
  }
  j["correction_word"] = to_string(cert.correction, ctx);
  j["correction_trivial_in_mf"] = cert.correction_trivial;
  j["verified"] = cert.verified;
  return j;
}

nlohmann::json link_json(const LinkModel& l) {
  nlohmann::json j;
  j["components"] = nlohmann::json::array();
  for (const Component& c : l.components()) {
    nlohmann::json cj;
    cj["meridian"] = c.name;
    cj["longitude"] = to_string(c.longitude, l.meridians());
    cj["framing"] = c.framing;
    j["components"].push_back(std::move(cj));
  }
  j["provenance"] = l.provenance();
  return j;
}

nlohmann::json probe_json(const ClassProbeReport& rep, const GeneratorContext& ctx) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["witness"] = to_string(rep.witness, ctx);
  j["witness_nontrivial"] = rep.witness_nontrivial;
  j["checked"] = rep.checked;
  j["trivial"] = rep.trivial;
  j["exhaustive"] = rep.exhaustive;
  j["passed"] = rep.passed;
  return j;
}

}  // namespace engelkit
