// JSON serialization for the domain types exposed by the command line:
// partitions, bi-shapes, Schur expansions, relation polynomials,
// regularity outcomes, and minimality verdicts.
#pragma once

#include <string>

#include "json.hpp"

#include "minors/minor_poly.hpp"
#include "minors/partition.hpp"
#include "minors/regbounds.hpp"
#include "minors/symfunc.hpp"
#include "minors/verify.hpp"

namespace minors {

using Json = nlohmann::json;

// Exact integers become JSON numbers while they fit the interoperable
// range, strings beyond it.
inline Json int_to_json(const Int& v) {
  static const Int bound = Int(1) << 53;
  if (v >= -bound && v <= bound) return v.convert_to<long long>();
  return v.str();
}

inline Json partition_to_json(const Partition& p) {
  Json out = Json::array();
  for (int part : p) out.push_back(part);
  return out;
}

inline Json bishape_to_json(const BiShape& b) {
  return Json{{"row", partition_to_json(b.row)},
              {"col", partition_to_json(b.col)}};
}

inline Json expansion_to_json(const SchurExpansion& expansion) {
  Json out = Json::array();
  for (const auto& [shape, mult] : expansion)
    out.push_back(
        {{"shape", partition_to_json(shape)}, {"mult", int_to_json(mult)}});
  return out;
}

inline Json poly_to_json(const MinorPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.terms) {
    Json symbols = Json::array();
    for (const MinorSymbol& s : mono)
      symbols.push_back({{"rows", s.rows}, {"cols", s.cols}});
    terms.push_back({{"coeff", int_to_json(coeff)}, {"monomial", symbols}});
  }
  return Json{{"terms", terms}, {"text", poly_to_text(p)}};
}

inline Json regularity_to_json(const RegularityCase& r) {
  Json out{{"case", to_string(r.case_tag)}};
  if (r.k0.has_value()) out["k0"] = *r.k0;
  if (r.value.has_value()) out["reg"] = *r.value;
  return out;
}

inline Json verdict_to_json(const MinimalityVerdict& v) {
  return Json{{"bishape", bishape_to_json(v.bishape)},
              {"degree", v.degree},
              {"status", v.status},
              {"rank_found", v.rank_found},
              {"rank_needed", v.rank_needed},
              {"witnesses", v.witnesses}};
}

}  // namespace minors
