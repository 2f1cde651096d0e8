#pragma once

// JSON documents for factorizations, tables and verification reports. Keys keep
// insertion order so repeated runs are byte-identical.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "fibpow/classify.hpp"
#include "fibpow/factor.hpp"
#include "fibpow/horadam.hpp"
#include "fibpow/poly_io.hpp"

namespace fibpow {

using Json = nlohmann::ordered_json;

inline Json factors_json(const Factorization& fac) {
  Json factors = Json::array();
  for (const FactorPower& fp : fac.factors) factors.push_back(Json{{"poly", render(fp.base)}, {"mult", fp.multiplicity}});
  return factors;
}

inline Json to_json(const Factorization& fac) { return Json{{"unit", render(fac.unit)}, {"factors", factors_json(fac)}}; }

inline Json to_json(const HoradamParams& params) {
  return Json{{"f", render(params.f())}, {"g", render(params.g())}};
}

inline Json to_json(const ReportRow& row) {
  return Json{{"n", row.n}, {"predicted", row.predicted}, {"computed", row.computed}};
}

inline Json to_json(const VerificationReport& report) {
  const TheoremCase& c = report.theorem_case;
  auto rows = [](const std::vector<ReportRow>& list) {
    Json out = Json::array();
    for (const ReportRow& r : list) out.push_back(to_json(r));
    return out;
  };
  Json doc;
  doc["theorem"] = std::string(theorem_name(c.theorem));
  doc["p"] = c.field->characteristic();
  doc["e"] = c.field->degree();
  doc["j"] = c.j ? Json(*c.j) : Json(nullptr);
  doc["params"] = to_json(c.params);
  doc["range"] = Json::array({c.n_min, c.n_max});
  doc["degree_cap"] = c.degree_cap;
  doc["rows"] = rows(report.rows);
  doc["witnesses"] = rows(report.witnesses);
  doc["mismatches"] = rows(report.mismatches);
  doc["skipped"] = report.skipped;
  doc["status"] = std::string(status_name(report.status));
  doc["positives"] = report.positives();
  return doc;
}

}  // namespace fibpow
