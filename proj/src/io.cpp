#include "qaseries/io.hpp"

#include <string>

#include "qaseries/errors.hpp"

namespace qaseries {

using nlohmann::json;

json to_json(const Expo& e) {
  json out = json::array();
  for (auto v : e.values()) out.push_back(v);
  return out;
}

json to_json(const Series& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) {
    terms.push_back({{"expo", to_json(e)},
                     {"numerator", c.get_num().get_str()},
                     {"denominator", c.get_den().get_str()}});
  }
  return {{"nvars", s.nvars()},
          {"trunc", s.trunc()},
          {"guaranteed_degree", s.guaranteed_degree()},
          {"canonical", to_string(s)},
          {"terms", std::move(terms)}};
}

Series series_from_json(const json& j) {
  try {
    const auto nvars = j.at("nvars").get<std::size_t>();
    const auto trunc = j.at("trunc").get<unsigned>();
    const auto guaranteed = j.at("guaranteed_degree").get<Degree>();
    Series::TermMap terms;
    for (const auto& t : j.at("terms")) {
      Expo e(t.at("expo").get<std::vector<Expo::value_type>>());
      if (e.size() != nvars) {
        throw PreconditionError("series_from_json: exponent length mismatch");
      }
      const mpz_class num(t.at("numerator").get<std::string>(), 10);
      const mpz_class den(t.at("denominator").get<std::string>(), 10);
      if (!terms.emplace(std::move(e), make_coeff(num, den)).second) {
        throw PreconditionError("series_from_json: duplicate exponent");
      }
    }
    return Series(nvars, trunc, std::move(terms), guaranteed);
  } catch (const json::exception& ex) {
    throw PreconditionError(std::string("series_from_json: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw PreconditionError(std::string("series_from_json: bad integer: ") +
                            ex.what());
  }
}

json to_json(const DistinguishedPoly& p) {
  json coeffs = json::array();
  for (unsigned i = 1; i <= p.coeffs.size(); ++i) {
    coeffs.push_back(to_json(p.coeff_embedded(i)));
  }
  return {{"d", p.d}, {"k", p.k}, {"expanded", to_json(expand(p))},
          {"coeffs", std::move(coeffs)}};
}

json to_json(const DivisionResult& r) {
  return {{"quotient", to_json(r.quotient)},
          {"remainder", to_json(r.remainder)},
          {"d", r.d},
          {"k", r.k},
          {"guaranteed_degree", r.guaranteed_degree}};
}

json to_json(const PreparationResult& r) {
  return {{"unit", to_json(r.unit)},
          {"poly", to_json(r.poly)},
          {"guaranteed_degree", r.guaranteed_degree}};
}

json to_json(const LemmaResult& r) {
  return {{"f0", to_json(r.f0)},
          {"f1", to_json(r.f1)},
          {"guaranteed_degree", r.guaranteed_degree}};
}

json to_json(const HoloPair& p) {
  return {{"u", to_json(p.u)},
          {"v", to_json(p.v)},
          {"guaranteed_degree", p.guaranteed_degree}};
}

json to_json(const CauchyRiemannResidual& r) {
  return {{"residual1", to_json(r.du_dx1_minus_dv_dx2)},
          {"residual2", to_json(r.du_dx2_plus_dv_dx1)},
          {"checked_to", r.checked_to},
          {"pass", r.passes}};
}

json to_json(const SemigroupReport& r) {
  json generators = json::array();
  for (const auto& g : r.generators) generators.push_back(to_json(g));
  json checked = json::array();
  for (const auto& entry : r.checked) {
    json witness = json::array();
    for (const auto& w : entry.witness) witness.push_back(to_json(w));
    checked.push_back({{"target", to_json(entry.target)},
                       {"member", entry.member},
                       {"witness", std::move(witness)}});
  }
  return {{"generators", std::move(generators)},
          {"checked", std::move(checked)},
          {"all_members", r.all_members()}};
}

}  // namespace qaseries
