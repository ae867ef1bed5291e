#pragma once

#include "json.hpp"
#include "qaseries/pipelines.hpp"
#include "qaseries/series.hpp"
#include "qaseries/weierstrass.hpp"

namespace qaseries {

// Structured export. A series becomes
//   {"nvars": n, "trunc": N, "guaranteed_degree": G, "canonical": "...",
//    "terms": [{"expo": [...], "numerator": "p", "denominator": "q"}, ...]}
// with terms in canonical order and integers as decimal strings.
nlohmann::json to_json(const Series& s);

// Inverse of to_json(Series); "canonical" is ignored. Throws
// PreconditionError on malformed documents.
Series series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Expo& e);
nlohmann::json to_json(const DistinguishedPoly& p);
nlohmann::json to_json(const DivisionResult& r);
nlohmann::json to_json(const PreparationResult& r);
nlohmann::json to_json(const LemmaResult& r);
nlohmann::json to_json(const HoloPair& p);
nlohmann::json to_json(const CauchyRiemannResidual& r);
nlohmann::json to_json(const SemigroupReport& r);

}  // namespace qaseries
