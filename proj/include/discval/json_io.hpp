#pragma once

// JSON serialization for the report types. All documents carry
// "schema": 1; valuations are integers with the string sentinel "inf" for
// +infinity. nlohmann::json keeps object keys sorted, so identical inputs
// produce byte-identical output.

#include <json.hpp>

#include "discval/discriminant.hpp"
#include "discval/localanalysis.hpp"
#include "discval/specialfiber.hpp"
#include "discval/verify.hpp"

namespace discval {

using json = nlohmann::json;

inline json to_json(const Valuation& v) {
  if (v.inf) return json("inf");
  return json(v.v);
}

template <typename R>
json to_json(const R& ring, const DiscriminantResult<R>& r) {
  json j;
  j["schema"] = 1;
  j["value"] = ring.str(r.value);
  if (r.has_valuation) j["valuation"] = to_json(r.valuation);
  j["n"] = r.n;
  j["d"] = r.d;
  j["retries_used"] = r.retries_used;
  return j;
}

inline json to_json(const FqRing& base, const SingularLocusReport& r) {
  json j;
  j["schema"] = 1;
  j["dimension"] = r.dimension;
  j["degree"] = (r.degree < 0) ? json(nullptr) : json(r.degree);
  j["r"] = (r.r < 0) ? json(nullptr) : json(r.r);
  j["points_possibly_incomplete"] = r.points_possibly_incomplete;
  j["span_dim"] = r.span_dim;
  j["contains_line"] = line_flag_str(r.contains_line);
  json pts = json::array();
  for (const auto& cp : r.closed_points) {
    json p;
    p["field_degree"] = cp.field_degree;
    p["point"] = point_str(cp.field, cp.rep);
    p["local_multiplicity"] = cp.local_multiplicity;
    if (cp.field_degree > 1) p["field_modulus"] = fp_poly_str(cp.field.modulus, "a");
    pts.push_back(p);
  }
  j["closed_points"] = pts;
  json rat = json::array();
  for (const auto& p : r.rational_points) rat.push_back(point_str(base, p));
  j["rational_points"] = rat;
  return j;
}

inline json to_json(const FqRing& base, const Theorem11Report& r) {
  json j;
  j["schema"] = 1;
  j["valuation"] = to_json(r.valuation);
  j["regular"] = regularity_str(r.regular);
  j["nondeg_single_point"] = r.nondeg_single_point;
  j["equivalence_holds"] = r.equivalence_holds ? json(*r.equivalence_holds) : json("undetermined");
  j["char2_odd_case"] = r.char2_odd_case;
  if (r.char2_v_not_1) j["char2_v_not_1"] = *r.char2_v_not_1;
  j["sing"] = to_json(base, r.sing);
  json pts = json::array();
  for (const auto& pa : r.points) {
    json p;
    p["point"] = pa.point;
    p["field_degree"] = pa.field_degree;
    p["local_multiplicity"] = pa.local_multiplicity;
    p["classification"] = pa.classification;
    p["regularity"] = pa.regularity;
    pts.push_back(p);
  }
  j["points"] = pts;
  return j;
}

inline json to_json(const VerifyReport& r) {
  json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["instances"] = r.instances;
  j["passed"] = r.passed;
  if (!r.summary.empty()) j["summary"] = r.summary;
  json fails = json::array();
  for (const auto& f : r.failures) {
    fails.push_back({{"index", f.index}, {"instance", f.description}, {"detail", f.detail}});
  }
  j["failures"] = fails;
  json skips = json::array();
  for (const auto& s : r.skipped) {
    skips.push_back({{"index", s.index}, {"instance", s.description}, {"reason", s.detail}});
  }
  j["skipped"] = skips;
  j["ok"] = r.ok();
  return j;
}

}  // namespace discval
