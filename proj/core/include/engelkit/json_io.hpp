#pragma once

#include <json.hpp>

#include "engelkit/decomp.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/links.hpp"
#include "engelkit/magnus.hpp"
#include "engelkit/milnor.hpp"
#include "engelkit/words.hpp"

namespace engelkit {

// All emitters are deterministic: term maps iterate in (degree, lex) order
// and nlohmann::json keeps object keys sorted.

nlohmann::json series_json(const TermMap& terms, int degree_cap);
nlohmann::json series_json(const TruncSeries& s);
nlohmann::json series_json(const ReducedSeries& s);

nlohmann::json certificate_json(const EngelCertificate& cert,
                                const GeneratorContext& ctx);
nlohmann::json certificate_json(const DecompositionCertificate& cert,
                                const GeneratorContext& ctx);
nlohmann::json link_json(const LinkModel& l);
nlohmann::json probe_json(const ClassProbeReport& rep, const GeneratorContext& ctx);

}  // namespace engelkit
